#include "fock/maps.hpp"

#include <algorithm>
#include <cassert>

#include "fock/charges.hpp"

namespace fock {

namespace {

// (lambda^l, lambda^1, ..., lambda^{l-1})
Multipartition cyclic_shift(const Multipartition& mp) {
    std::vector<Partition> comps = mp.components();
    std::rotate(comps.begin(), comps.end() - 1, comps.end());
    return Multipartition{std::move(comps)};
}

void require_canonical_orbit(const Multicharge& charge, const Multicharge& canon) {
    if (!same_orbit(charge, canon))
        throw domain_error("multicharge " + charge.to_string() +
                           " is not in the orbit of " + canon.to_string());
}

} // namespace

Multicharge canonical_charge(int l, int e) {
    if (l < 1) throw domain_error("level must be at least 1");
    if (e < 2) throw domain_error("level e must be at least 2");
    if (e % l != 0) throw domain_error("canonical charge needs l dividing e");
    std::vector<int> entries(l);
    for (int c = 0; c < l; ++c) entries[c] = c * (e / l);
    return Multicharge{std::move(entries), e};
}

Multipartition hu_map_conjugate(const Multipartition& mp, const Multicharge& charge) {
    Multicharge canon = canonical_charge(charge.level(), charge.e);
    require_canonical_orbit(charge, canon);
    return psi(cyclic_shift(psi(mp, charge, canon)), canon, charge);
}

Multipartition hu_map_replay(const Multipartition& mp, const Multicharge& charge) {
    Multicharge canon = canonical_charge(charge.level(), charge.e);
    require_canonical_orbit(charge, canon);
    std::vector<int> path = extract_path(mp, charge);
    const int shift = charge.e / charge.level();
    for (int& i : path) i = mod_e(i + shift, charge.e);
    return replay(path, charge);
}

Multipartition hu_map(const Multipartition& mp, const Multicharge& charge) {
    Multipartition image = hu_map_conjugate(mp, charge);
    assert(image == hu_map_replay(mp, charge));
    return image;
}

namespace {

void check_iota_args(const Multipartition& mp, int k, const Multicharge& charge) {
    const int l = charge.level();
    if (k < 1 || l % k != 0) throw domain_error("iota needs k dividing l");
    if (charge.e % l != 0) throw domain_error("iota needs l dividing e");
    if (mp.level() != k)
        throw domain_error("iota input must be a k-partition");
    require_canonical_orbit(charge, canonical_charge(l, charge.e));
}

// The source charge of iota_k: the canonical charge of level ke/l on k parts.
Multicharge iota_source_charge(int k, const Multicharge& charge) {
    return canonical_charge(k, k * charge.e / charge.level());
}

} // namespace

Multipartition iota_repeat(const Multipartition& mp, int k, const Multicharge& charge) {
    check_iota_args(mp, k, charge);
    const int l = charge.level();
    Multicharge source = iota_source_charge(k, charge);
    if (!is_uglov(mp, source))
        throw domain_error("iota input '" + mp.to_string() +
                           "' is not Uglov for charge " + source.to_string());
    std::vector<Partition> comps;
    comps.reserve(l);
    for (int rep = 0; rep < l / k; ++rep)
        for (int c = 1; c <= k; ++c) comps.push_back(mp.component(c));
    return psi(Multipartition{std::move(comps)},
               canonical_charge(l, charge.e), charge);
}

Multipartition iota_replay(const Multipartition& mp, int k, const Multicharge& charge) {
    check_iota_args(mp, k, charge);
    const int l = charge.level();
    const int e = charge.e;
    const int block = k * e / l;  // residue step inside one expanded block
    std::vector<int> path = extract_path(mp, iota_source_charge(k, charge));
    std::vector<int> expanded;
    expanded.reserve(path.size() * (l / k));
    for (int i : path)
        for (int step = 0; step < l / k; ++step)
            expanded.push_back(mod_e(i + step * block, e));
    return replay(expanded, charge);
}

Multipartition iota(const Multipartition& mp, int k, const Multicharge& charge) {
    Multipartition image = iota_repeat(mp, k, charge);
    assert(image == iota_replay(mp, k, charge));
    return image;
}

int r_value(const Multipartition& mp) {
    int orbit = 0;
    Multipartition cur = mp;
    for (int d = 0; d < mp.level(); ++d) {
        cur = cyclic_shift(cur);
        if (cur == mp && orbit == 0) orbit = d + 1;
    }
    return mp.level() / orbit;
}

int split_count(const Multipartition& mp, const Multicharge& charge) {
    Multicharge canon = canonical_charge(charge.level(), charge.e);
    require_canonical_orbit(charge, canon);
    return r_value(psi(mp, charge, canon));
}

bool is_in_iota_image(const Multipartition& mp, int k, const Multicharge& charge) {
    const int l = charge.level();
    if (k < 1 || l % k != 0) throw domain_error("iota image needs k dividing l");
    Multicharge canon = canonical_charge(l, charge.e);
    require_canonical_orbit(charge, canon);
    Multipartition image = psi(mp, charge, canon);
    for (int c = k + 1; c <= l; ++c)
        if (!(image.component(c) == image.component(c - k))) return false;
    return true;
}

bool is_divided_bipartition(const Multipartition& mp, int N, int e) {
    if (mp.level() != 2) throw domain_error("divided bipartitions need l = 2");
    if (e < 2 || e % 2 != 0) throw domain_error("divided bipartitions need even e");
    if (N < 0) throw domain_error("N must be nonnegative");
    Multicharge from{{0, e / 2 + N * e}, e};
    Multicharge to{{N * e, e / 2}, e};
    return psi(mp, from, to) == tau_shortcut(mp);
}

} // namespace fock
