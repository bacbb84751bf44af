#include "fock/iso.hpp"

#include <algorithm>

#include "fock/charges.hpp"

namespace fock {

std::vector<int> extract_path(const Multipartition& mp, const Multicharge& charge) {
    auto [terminal, path] = hw_reduce(mp, charge);
    if (!terminal.is_empty())
        throw domain_error("multipartition '" + mp.to_string() +
                           "' is not Uglov for charge " + charge.to_string());
    return path;
}

Multipartition replay(const std::vector<int>& path, const Multicharge& charge) {
    Multipartition cur = Multipartition::empty(charge.level());
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto next = f_op(cur, charge, mod_e(*it, charge.e));
        if (!next)
            throw domain_error("replay step f_" + std::to_string(*it) +
                               " undefined at '" + cur.to_string() + "'");
        cur = std::move(*next);
    }
    return cur;
}

Multipartition psi(const Multipartition& mp, const Multicharge& from,
                   const Multicharge& to) {
    if (!same_orbit(from, to))
        throw domain_error("multicharges " + from.to_string() + " and " +
                           to.to_string() + " are not in the same orbit");
    return replay(extract_path(mp, from), to);
}

Multipartition tau_shortcut(const Multipartition& mp) {
    std::vector<Partition> comps = mp.components();
    std::rotate(comps.begin(), comps.begin() + 1, comps.end());
    return Multipartition{std::move(comps)};
}

} // namespace fock
