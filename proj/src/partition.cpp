#include "fock/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fock {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& text) {
    if (text.empty()) throw parse_error("empty integer token");
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw parse_error("bad integer '" + text + "'");
    }
    if (pos != text.size()) throw parse_error("bad integer '" + text + "'");
    return value;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw domain_error("parts must be weakly decreasing and positive");
    }
    rank_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << '.';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    if (text == "-") return Partition{};
    std::vector<int> parts;
    for (const auto& tok : split(text, '.')) parts.push_back(parse_int(tok));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw parse_error("not a partition: '" + text + "'");
    }
    return Partition{std::move(parts)};
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw domain_error("level must be at least 1");
    for (const auto& p : components_) rank_ += p.rank();
}

Multipartition Multipartition::empty(int level) {
    if (level < 1) throw domain_error("level must be at least 1");
    return Multipartition{std::vector<Partition>(level)};
}

std::string Multipartition::to_string() const {
    std::ostringstream os;
    for (int c = 0; c < level(); ++c) {
        if (c) os << '|';
        os << components_[c].to_string();
    }
    return os.str();
}

Multipartition Multipartition::parse(const std::string& text) {
    std::vector<Partition> comps;
    for (const auto& tok : split(text, '|')) comps.push_back(Partition::parse(tok));
    return Multipartition{std::move(comps)};
}

std::string Node::to_string() const {
    std::ostringstream os;
    os << '(' << row << ',' << col << ',' << comp << ')';
    return os.str();
}

Multicharge::Multicharge(std::vector<int> entries, int e)
    : entries(std::move(entries)), e(e) {
    if (this->entries.empty()) throw domain_error("multicharge must be nonempty");
    if (e < 2) throw domain_error("level e must be at least 2");
}

std::string Multicharge::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ',';
        os << entries[i];
    }
    return os.str();
}

Multicharge Multicharge::parse(const std::string& text, int e) {
    std::vector<int> entries;
    for (const auto& tok : split(text, ',')) entries.push_back(parse_int(tok));
    return Multicharge{std::move(entries), e};
}

int mod_e(long long value, int e) {
    long long r = value % e;
    return static_cast<int>(r < 0 ? r + e : r);
}

int content(const Node& node, const Multicharge& charge) {
    if (node.comp < 1 || node.comp > charge.level())
        throw domain_error("node component out of range for multicharge");
    return node.col - node.row + charge.entry(node.comp);
}

int residue(const Node& node, const Multicharge& charge) {
    return mod_e(content(node, charge), charge.e);
}

std::vector<Node> addable_nodes(const Multipartition& mp,
                                const Multicharge& charge, int i) {
    if (mp.level() != charge.level())
        throw domain_error("multipartition and multicharge levels differ");
    std::vector<Node> out;
    for (int c = 1; c <= mp.level(); ++c) {
        const Partition& p = mp.component(c);
        // one slot per distinct part value plus the new bottom row
        for (int row = 1; row <= p.length(); ++row) {
            if (row == 1 || p.part(row) < p.part(row - 1)) {
                Node node{row, p.part(row) + 1, c};
                if (residue(node, charge) == i) out.push_back(node);
            }
        }
        Node bottom{p.length() + 1, 1, c};
        if (residue(bottom, charge) == i) out.push_back(bottom);
    }
    return out;
}

std::vector<Node> removable_nodes(const Multipartition& mp,
                                  const Multicharge& charge, int i) {
    if (mp.level() != charge.level())
        throw domain_error("multipartition and multicharge levels differ");
    std::vector<Node> out;
    for (int c = 1; c <= mp.level(); ++c) {
        const Partition& p = mp.component(c);
        for (int row = 1; row <= p.length(); ++row) {
            if (p.part(row) > p.part(row + 1)) {
                Node node{row, p.part(row), c};
                if (residue(node, charge) == i) out.push_back(node);
            }
        }
    }
    return out;
}

bool is_e_regular(const Partition& p, int e) {
    if (e < 2) throw domain_error("level e must be at least 2");
    int run = 0;
    for (int row = 1; row <= p.length(); ++row) {
        run = (row > 1 && p.part(row) == p.part(row - 1)) ? run + 1 : 1;
        if (run >= e) return false;
    }
    return true;
}

Multipartition add_node(const Multipartition& mp, const Node& node) {
    std::vector<Partition> comps = mp.components();
    const Partition& p = comps.at(node.comp - 1);
    if (node.row < 1 || node.row > p.length() + 1 || node.col != p.part(node.row) + 1)
        throw domain_error("node " + node.to_string() + " is not addable");
    std::vector<int> parts = p.parts();
    if (node.row == p.length() + 1)
        parts.push_back(1);
    else
        ++parts[node.row - 1];
    comps[node.comp - 1] = Partition{std::move(parts)};
    return Multipartition{std::move(comps)};
}

Multipartition remove_node(const Multipartition& mp, const Node& node) {
    std::vector<Partition> comps = mp.components();
    const Partition& p = comps.at(node.comp - 1);
    if (node.row < 1 || node.row > p.length() || node.col != p.part(node.row) ||
        p.part(node.row) <= p.part(node.row + 1))
        throw domain_error("node " + node.to_string() + " is not removable");
    std::vector<int> parts = p.parts();
    --parts[node.row - 1];
    comps[node.comp - 1] = Partition{std::move(parts)};
    return Multipartition{std::move(comps)};
}

} // namespace fock
