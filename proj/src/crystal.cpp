#include "fock/crystal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "json.hpp"

namespace fock {

std::string SignatureWord::tags() const {
    std::string out;
    out.reserve(letters.size());
    for (const auto& letter : letters) out.push_back(letter.addable ? 'A' : 'R');
    return out;
}

bool precedes(const Node& g1, const Node& g2, const Multicharge& charge) {
    int c1 = content(g1, charge);
    int c2 = content(g2, charge);
    if (c1 != c2) return c1 < c2;
    return g1.comp > g2.comp;
}

SignatureWord signature_word(const Multipartition& mp,
                             const Multicharge& charge, int i) {
    SignatureWord word;
    for (const Node& node : addable_nodes(mp, charge, i))
        word.letters.push_back({node, true});
    for (const Node& node : removable_nodes(mp, charge, i))
        word.letters.push_back({node, false});
    std::sort(word.letters.begin(), word.letters.end(),
              [&](const Letter& a, const Letter& b) {
                  return precedes(a.node, b.node, charge);
              });
    // distinct (content, component) pairs make the order strict
    for (std::size_t k = 1; k < word.letters.size(); ++k)
        assert(precedes(word.letters[k - 1].node, word.letters[k].node, charge));
    return word;
}

ReducedWord reduce_word(const SignatureWord& word) {
    // Scan left to right; an A cancels the most recent unmatched R.
    std::vector<Letter> survivors;
    for (const Letter& letter : word.letters) {
        if (letter.addable && !survivors.empty() && !survivors.back().addable)
            survivors.pop_back();
        else
            survivors.push_back(letter);
    }
    ReducedWord reduced;
    for (const Letter& letter : survivors) {
        if (letter.addable) {
            assert(reduced.surviving_removable.empty());  // shape A^p R^q
            reduced.surviving_addable.push_back(letter.node);
        } else {
            reduced.surviving_removable.push_back(letter.node);
        }
    }
    return reduced;
}

std::optional<Node> good_addable(const Multipartition& mp,
                                 const Multicharge& charge, int i) {
    ReducedWord reduced = reduce_word(signature_word(mp, charge, i));
    if (reduced.surviving_addable.empty()) return std::nullopt;
    return reduced.surviving_addable.back();
}

std::optional<Node> good_removable(const Multipartition& mp,
                                   const Multicharge& charge, int i) {
    ReducedWord reduced = reduce_word(signature_word(mp, charge, i));
    if (reduced.surviving_removable.empty()) return std::nullopt;
    return reduced.surviving_removable.front();
}

std::optional<Multipartition> f_op(const Multipartition& mp,
                                   const Multicharge& charge, int i) {
    auto node = good_addable(mp, charge, i);
    if (!node) return std::nullopt;
    return add_node(mp, *node);
}

std::optional<Multipartition> e_op(const Multipartition& mp,
                                   const Multicharge& charge, int i) {
    auto node = good_removable(mp, charge, i);
    if (!node) return std::nullopt;
    return remove_node(mp, *node);
}

std::pair<Multipartition, std::vector<int>> hw_reduce(const Multipartition& mp,
                                                      const Multicharge& charge) {
    Multipartition cur = mp;
    std::vector<int> removed;
    for (;;) {
        bool stepped = false;
        for (int i = 0; i < charge.e && !stepped; ++i) {
            if (auto next = e_op(cur, charge, i)) {
                cur = std::move(*next);
                removed.push_back(i);
                stepped = true;
            }
        }
        if (!stepped) break;
    }
    return {cur, removed};
}

bool is_uglov(const Multipartition& mp, const Multicharge& charge) {
    return hw_reduce(mp, charge).first.is_empty();
}

CrystalGraph crystal_graph(const Multicharge& charge, int n_max) {
    if (n_max < 0) throw domain_error("n_max must be nonnegative");
    CrystalGraph graph;
    graph.charge = charge;
    graph.ranks.push_back({Multipartition::empty(charge.level())});
    for (int r = 0; r < n_max; ++r) {
        std::map<std::string, Multipartition> next;  // canonical order
        for (const Multipartition& mp : graph.ranks[r]) {
            for (int i = 0; i < charge.e; ++i) {
                if (auto child = f_op(mp, charge, i)) {
                    graph.arrows.push_back({mp, i, *child});
                    next.emplace(child->to_string(), std::move(*child));
                }
            }
        }
        std::vector<Multipartition> layer;
        layer.reserve(next.size());
        for (auto& [key, mp] : next) layer.push_back(std::move(mp));
        graph.ranks.push_back(std::move(layer));
    }
    std::sort(graph.arrows.begin(), graph.arrows.end(),
              [](const Arrow& a, const Arrow& b) {
                  if (a.from.rank() != b.from.rank()) return a.from.rank() < b.from.rank();
                  auto ka = a.from.to_string(), kb = b.from.to_string();
                  if (ka != kb) return ka < kb;
                  return a.i < b.i;
              });
    return graph;
}

std::vector<Multipartition> uglov_set(const Multicharge& charge, int n) {
    return crystal_graph(charge, n).ranks.at(n);
}

std::string CrystalGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (const auto& layer : ranks)
        for (const auto& mp : layer) os << "  \"" << mp.to_string() << "\";\n";
    for (const auto& arrow : arrows)
        os << "  \"" << arrow.from.to_string() << "\" -> \"" << arrow.to.to_string()
           << "\" [label=" << arrow.i << "];\n";
    os << "}\n";
    return os.str();
}

std::string CrystalGraph::to_json() const {
    nlohmann::ordered_json doc;
    doc["e"] = charge.e;
    doc["charge"] = charge.entries;
    auto& layers = doc["ranks"] = nlohmann::ordered_json::array();
    for (const auto& layer : ranks) {
        nlohmann::ordered_json names = nlohmann::ordered_json::array();
        for (const auto& mp : layer) names.push_back(mp.to_string());
        layers.push_back(std::move(names));
    }
    auto& edges = doc["arrows"] = nlohmann::ordered_json::array();
    for (const auto& arrow : arrows) {
        nlohmann::ordered_json edge;
        edge["from"] = arrow.from.to_string();
        edge["i"] = arrow.i;
        edge["to"] = arrow.to.to_string();
        edges.push_back(std::move(edge));
    }
    return doc.dump(2);
}

} // namespace fock
