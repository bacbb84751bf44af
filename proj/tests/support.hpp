#ifndef FOCK_TESTS_SUPPORT_HPP
#define FOCK_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <vector>

#include "fock/crystal.hpp"

namespace fock::testing {

// All partitions of n, independent of the library's own enumeration.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All l-partitions of n (brute-force oracle for crystal layers).
inline std::vector<Multipartition> multipartitions_of(int level, int n) {
    std::vector<Multipartition> out;
    std::vector<Partition> comps;
    auto rec = [&](auto&& self, int c, int remaining) -> void {
        if (c == level) {
            if (remaining == 0) out.emplace_back(comps);
            return;
        }
        if (c == level - 1) {
            for (const auto& p : partitions_of(remaining)) {
                comps.push_back(p);
                self(self, c + 1, 0);
                comps.pop_back();
            }
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            for (const auto& p : partitions_of(m)) {
                comps.push_back(p);
                self(self, c + 1, remaining - m);
                comps.pop_back();
            }
        }
    };
    rec(rec, 0, n);
    return out;
}

// Strip good removable nodes picking a random admissible residue each time;
// returns the residues in removal order (a random valid f-path).
inline std::optional<std::vector<int>> random_path(const Multipartition& mp,
                                                   const Multicharge& charge,
                                                   std::mt19937& rng) {
    Multipartition cur = mp;
    std::vector<int> path;
    while (!cur.is_empty()) {
        std::vector<int> admissible;
        for (int i = 0; i < charge.e; ++i)
            if (good_removable(cur, charge, i)) admissible.push_back(i);
        if (admissible.empty()) return std::nullopt;  // not Uglov
        int i = admissible[std::uniform_int_distribution<std::size_t>(
            0, admissible.size() - 1)(rng)];
        cur = *e_op(cur, charge, i);
        path.push_back(i);
    }
    return path;
}

} // namespace fock::testing

#endif
