#ifndef FOCK_PARTITION_HPP
#define FOCK_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "fock/errors.hpp"

namespace fock {

/// A partition: weakly decreasing positive parts, trailing zeros never stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rank() const { return rank_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    /// 1-based part access; rows past the end are 0.
    int part(int row) const {
        return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
    }

    bool operator==(const Partition&) const = default;

    std::string to_string() const;                 // "4.3.1", empty is "-"
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int rank_ = 0;
};

/// An l-tuple of partitions; the vertices of the crystal.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);

    /// The empty l-partition.
    static Multipartition empty(int level);

    const std::vector<Partition>& components() const { return components_; }
    int level() const { return static_cast<int>(components_.size()); }
    int rank() const { return rank_; }
    bool is_empty() const { return rank_ == 0; }

    /// 1-based component access.
    const Partition& component(int c) const { return components_.at(c - 1); }

    bool operator==(const Multipartition&) const = default;

    std::string to_string() const;                 // "2.1|-|1"
    static Multipartition parse(const std::string& text);

private:
    std::vector<Partition> components_;
    int rank_ = 0;
};

/// A box or box-slot (row, column, component), all 1-based.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;

    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;

    std::string to_string() const;
};

/// An integer l-tuple together with the level e it is used at.
struct Multicharge {
    std::vector<int> entries;
    int e = 2;

    Multicharge() = default;
    Multicharge(std::vector<int> entries, int e);

    int level() const { return static_cast<int>(entries.size()); }
    /// 1-based entry access.
    int entry(int c) const { return entries.at(c - 1); }

    bool operator==(const Multicharge&) const = default;

    std::string to_string() const;                 // "0,2"
    static Multicharge parse(const std::string& text, int e);
};

/// cont(a,b,c) = b - a + s_c, exact (no reduction mod e).
int content(const Node& node, const Multicharge& charge);

/// Content reduced into {0,...,e-1}.
int residue(const Node& node, const Multicharge& charge);

int mod_e(long long value, int e);

/// All slots whose addition keeps every component a partition, residue i,
/// listed component-major (c ascending, then row ascending).
std::vector<Node> addable_nodes(const Multipartition& mp,
                                const Multicharge& charge, int i);

/// All row-end boxes whose removal keeps every component a partition, residue i.
std::vector<Node> removable_nodes(const Multipartition& mp,
                                  const Multicharge& charge, int i);

/// True iff no part value occurs e or more times.
bool is_e_regular(const Partition& p, int e);

Multipartition add_node(const Multipartition& mp, const Node& node);
Multipartition remove_node(const Multipartition& mp, const Node& node);

} // namespace fock

#endif
