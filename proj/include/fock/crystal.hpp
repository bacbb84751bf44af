#ifndef FOCK_CRYSTAL_HPP
#define FOCK_CRYSTAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fock/partition.hpp"

namespace fock {

/// One letter of a signature word: an i-node tagged addable (A) or removable (R).
struct Letter {
    Node node;
    bool addable = true;

    bool operator==(const Letter&) const = default;
};

/// The addable/removable i-nodes of a multipartition, sorted increasingly.
struct SignatureWord {
    std::vector<Letter> letters;

    /// "RAR"-style tag string.
    std::string tags() const;
};

/// Survivors of RA-cancellation; reads A^p R^q.
struct ReducedWord {
    std::vector<Node> surviving_addable;
    std::vector<Node> surviving_removable;
};

/// The order on same-residue nodes: smaller content first, ties to the
/// larger component.
bool precedes(const Node& g1, const Node& g2, const Multicharge& charge);

SignatureWord signature_word(const Multipartition& mp,
                             const Multicharge& charge, int i);

/// Delete RA factors until none remain (single left-to-right stack scan).
ReducedWord reduce_word(const SignatureWord& word);

/// Rightmost surviving A, if any.
std::optional<Node> good_addable(const Multipartition& mp,
                                 const Multicharge& charge, int i);

/// Leftmost surviving R, if any.
std::optional<Node> good_removable(const Multipartition& mp,
                                   const Multicharge& charge, int i);

/// Kashiwara operator f_i: add the good addable i-node.
std::optional<Multipartition> f_op(const Multipartition& mp,
                                   const Multicharge& charge, int i);

/// Kashiwara operator e_i: remove the good removable i-node.
std::optional<Multipartition> e_op(const Multipartition& mp,
                                   const Multicharge& charge, int i);

/// Strip good removable nodes, always at the smallest admissible residue,
/// until none is left.  Returns the terminal multipartition and the residues
/// in removal order, so that f_{i_1} ... f_{i_n}(empty) = mp whenever the
/// terminal is empty.
std::pair<Multipartition, std::vector<int>> hw_reduce(const Multipartition& mp,
                                                      const Multicharge& charge);

/// True iff mp lies in the crystal component of the empty multipartition.
bool is_uglov(const Multipartition& mp, const Multicharge& charge);

struct Arrow {
    Multipartition from;
    int i = 0;
    Multipartition to;

    bool operator==(const Arrow&) const = default;
};

/// The component of the empty multipartition, truncated at rank n_max.
/// Rank layers are kept in canonical (text-lexicographic) order.
struct CrystalGraph {
    Multicharge charge;
    std::vector<std::vector<Multipartition>> ranks;  // ranks[r] = layer r
    std::vector<Arrow> arrows;                       // sorted by (from, i)

    std::string to_dot() const;
    std::string to_json() const;
};

CrystalGraph crystal_graph(const Multicharge& charge, int n_max);

/// The rank-n layer, canonically ordered.
std::vector<Multipartition> uglov_set(const Multicharge& charge, int n);

} // namespace fock

#endif
