#ifndef FOCK_CHARGES_HPP
#define FOCK_CHARGES_HPP

#include <string>
#include <utility>
#include <vector>

#include "fock/partition.hpp"

namespace fock {

/// One generator of the extended affine symmetric group, as a move on charges.
struct GenToken {
    enum Kind { Sigma, Tau, TauInv };
    Kind kind = Tau;
    int index = 0;  // sigma index in 1..l-1, unused otherwise

    bool operator==(const GenToken&) const = default;
};

using GeneratorWord = std::vector<GenToken>;

std::string word_to_string(const GeneratorWord& word);  // "s1","t","T" tokens
GeneratorWord word_from_string(const std::string& text, int level);

/// Swap entries c, c+1.
Multicharge act_sigma(const Multicharge& charge, int c);

/// Add e to entry i.
Multicharge act_y(const Multicharge& charge, int i);

/// (s_1,...,s_l) -> (s_2,...,s_l,s_1+e).
Multicharge act_tau(const Multicharge& charge);

Multicharge act_tau_inverse(const Multicharge& charge);

Multicharge apply_token(const Multicharge& charge, const GenToken& token);

/// Tokens applied left to right.
Multicharge apply_word(const Multicharge& charge, const GeneratorWord& word);

/// Same orbit iff the residue multisets mod e coincide.
bool same_orbit(const Multicharge& s1, const Multicharge& s2);

/// Representative in the fundamental domain {0 <= s_1 <= ... <= s_l < e}
/// together with a generator word mapping `charge` onto it.  The word is
/// verified by replay before returning.
std::pair<Multicharge, GeneratorWord> to_fundamental(const Multicharge& charge);

/// The FLOTW membership test.  Requires 0 < s_j - s_i < e for all i < j;
/// throws domain_error otherwise (callers fall back to is_uglov).
bool is_flotw(const Multipartition& mp, const Multicharge& charge);

/// s_j - s_i >= n - 1 - e for all i < j.
bool is_very_dominant(const Multicharge& charge, int n);

} // namespace fock

#endif
