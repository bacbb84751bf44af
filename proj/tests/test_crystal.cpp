#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fock/crystal.hpp"
#include "support.hpp"

using namespace fock;

namespace {

Multipartition mp(const std::string& text) { return Multipartition::parse(text); }

std::set<std::string> names(const std::vector<Multipartition>& layer) {
    std::set<std::string> out;
    for (const auto& v : layer) out.insert(v.to_string());
    return out;
}

} // namespace

TEST_CASE("precedes") {
    Multicharge s01{{0, 1}, 3};
    CHECK(precedes(Node{2, 1, 2}, Node{1, 3, 2}, s01));
    CHECK(precedes(Node{1, 1, 2}, Node{1, 1, 1}, Multicharge{{0, 0}, 3}));
    CHECK(precedes(Node{3, 1, 2}, Node{2, 1, 1}, s01));
    CHECK_FALSE(precedes(Node{2, 1, 1}, Node{3, 1, 2}, s01));
}

TEST_CASE("signature words of ((4),(2,1))") {
    Multicharge s01{{0, 1}, 3};
    auto w0 = signature_word(mp("4|2.1"), s01, 0);
    CHECK(w0.tags() == "RAR");
    CHECK(w0.letters[0].node == Node{2, 1, 2});
    CHECK(w0.letters[1].node == Node{1, 3, 2});
    CHECK(w0.letters[2].node == Node{1, 4, 1});

    auto w2 = signature_word(mp("4|2.1"), s01, 2);
    CHECK(w2.tags() == "AAR");
    CHECK(w2.letters[0].node == Node{3, 1, 2});
    CHECK(w2.letters[1].node == Node{2, 1, 1});
    CHECK(w2.letters[2].node == Node{1, 2, 2});

    auto empty_word = signature_word(mp("-|-"), s01, 1);
    for (const auto& letter : empty_word.letters) CHECK(letter.addable);
}

TEST_CASE("word reduction") {
    Multicharge s01{{0, 1}, 3};
    auto r0 = reduce_word(signature_word(mp("4|2.1"), s01, 0));
    CHECK(r0.surviving_addable.empty());
    CHECK(r0.surviving_removable == std::vector<Node>{{1, 4, 1}});

    auto r2 = reduce_word(signature_word(mp("4|2.1"), s01, 2));
    CHECK(r2.surviving_addable.size() == 2);
    CHECK(r2.surviving_addable.back() == Node{2, 1, 1});
    CHECK(r2.surviving_removable == std::vector<Node>{{1, 2, 2}});

    SignatureWord ra{{{Node{1, 1, 1}, false}, {Node{1, 1, 2}, true}}};
    auto reduced = reduce_word(ra);
    CHECK(reduced.surviving_addable.empty());
    CHECK(reduced.surviving_removable.empty());
}

TEST_CASE("word reduction is confluent") {
    // exhaustive cancellation in random order must match the stack scan
    std::mt19937 rng(7);
    auto random_reduce = [&](std::vector<Letter> word) {
        for (;;) {
            std::vector<std::size_t> cuts;
            for (std::size_t k = 0; k + 1 < word.size(); ++k)
                if (!word[k].addable && word[k + 1].addable) cuts.push_back(k);
            if (cuts.empty()) return word;
            std::size_t k = cuts[std::uniform_int_distribution<std::size_t>(
                0, cuts.size() - 1)(rng)];
            word.erase(word.begin() + k, word.begin() + k + 2);
        }
    };
    for (int trial = 0; trial < 200; ++trial) {
        int len = std::uniform_int_distribution<int>(0, 12)(rng);
        SignatureWord word;
        for (int k = 0; k < len; ++k)
            word.letters.push_back(
                {Node{1, k + 1, 1}, std::bernoulli_distribution(0.5)(rng)});
        auto stack = reduce_word(word);
        std::vector<Letter> expect = random_reduce(word.letters);
        std::vector<Node> ea, er;
        for (const auto& letter : expect)
            (letter.addable ? ea : er).push_back(letter.node);
        CHECK(stack.surviving_addable == ea);
        CHECK(stack.surviving_removable == er);
    }
}

TEST_CASE("good nodes") {
    Multicharge s01{{0, 1}, 3};
    CHECK(good_addable(mp("4|2.1"), s01, 2) == Node{2, 1, 1});
    CHECK_FALSE(good_addable(mp("4|2.1"), s01, 0).has_value());
    CHECK(good_removable(mp("4|2.1"), s01, 0) == Node{1, 4, 1});
    CHECK(good_removable(mp("4|2.1"), s01, 2) == Node{1, 2, 2});
    CHECK_FALSE(good_removable(mp("-|-"), s01, 0).has_value());

    Multicharge s001{{0, 0, 1}, 2};
    CHECK(good_addable(mp("-|-|-"), s001, 0) == Node{1, 1, 1});
}

TEST_CASE("Kashiwara operators on the rank-1 layer") {
    Multicharge s001{{0, 0, 1}, 2};
    CHECK(f_op(mp("1|-|-"), s001, 1) == mp("2|-|-"));
    CHECK(f_op(mp("1|-|-"), s001, 0) == mp("1|1|-"));
    CHECK(e_op(mp("1|1|-"), s001, 0) == mp("1|-|-"));
    CHECK_FALSE(e_op(mp("-|-|-"), s001, 0).has_value());
    CHECK(e_op(mp("4.1|2.1"), Multicharge{{0, 1}, 3}, 2) == mp("4|2.1"));
}

TEST_CASE("hw_reduce") {
    Multicharge s001{{0, 0, 1}, 2};
    auto [t0, p0] = hw_reduce(mp("-|-|-"), s001);
    CHECK(t0.is_empty());
    CHECK(p0.empty());

    auto [t1, p1] = hw_reduce(mp("1.1|-"), Multicharge{{0, 0}, 2});
    (void)t1;
    auto [t2, p2] = hw_reduce(mp("1|1|-"), s001);
    CHECK(t2.is_empty());
    CHECK(p2 == std::vector<int>{0, 0});

    for (const auto& layer : crystal_graph(s001, 4).ranks)
        for (const auto& v : layer)
            CHECK(hw_reduce(v, s001).first.is_empty());
}

TEST_CASE("membership") {
    Multicharge s001{{0, 0, 1}, 2};
    CHECK(is_uglov(mp("-|-|-"), s001));
    CHECK_FALSE(is_uglov(mp("-|1|-"), s001));
    // the good addable 0-node of (2,-,1) sits at the end of the first row
    CHECK(f_op(mp("2|-|1"), s001, 0) == mp("3|-|1"));
    CHECK(is_uglov(mp("3|-|1"), s001));
    CHECK_FALSE(is_uglov(mp("2|-|2"), s001));
}

TEST_CASE("crystal graph layers") {
    Multicharge s001{{0, 0, 1}, 2};
    auto graph = crystal_graph(s001, 4);
    REQUIRE(graph.ranks.size() == 5);
    CHECK(names(graph.ranks[0]) == std::set<std::string>{"-|-|-"});
    CHECK(names(graph.ranks[1]) == std::set<std::string>{"1|-|-", "-|-|1"});
    CHECK(names(graph.ranks[2]) == std::set<std::string>{"2|-|-", "1|1|-", "-|-|2"});
    CHECK(names(graph.ranks[3]) ==
          std::set<std::string>{"3|-|-", "2|-|1", "2|1|-", "1|-|2", "-|-|3"});
    CHECK(names(graph.ranks[4]) ==
          std::set<std::string>{"4|-|-", "3|1|-", "3|-|1", "2.1|-|1", "2|2|-",
                                "1|1|2", "1|-|3", "-|-|4"});

    auto graph2 = crystal_graph(Multicharge{{2, 0, 3}, 2}, 4);
    CHECK(names(graph2.ranks[4]) ==
          std::set<std::string>{"4|-|-", "3|1|-", "3|-|1", "2.1|-|1", "2|1|1",
                                "1|-|2.1", "1|-|3", "-|-|4"});

    auto trivial = crystal_graph(s001, 0);
    CHECK(trivial.ranks.size() == 1);
    CHECK(trivial.arrows.empty());
}

TEST_CASE("degree bounds and inverse property") {
    for (Multicharge charge :
         {Multicharge{{0, 0, 1}, 2}, Multicharge{{0, 2}, 4}, Multicharge{{0, 1}, 3}}) {
        auto graph = crystal_graph(charge, 5);
        std::map<std::pair<std::string, int>, int> out_deg, in_deg;
        for (const auto& arrow : graph.arrows) {
            CHECK(arrow.to.rank() == arrow.from.rank() + 1);
            CHECK(e_op(arrow.to, charge, arrow.i) == arrow.from);
            CHECK(++out_deg[{arrow.from.to_string(), arrow.i}] <= 1);
            CHECK(++in_deg[{arrow.to.to_string(), arrow.i}] <= 1);
        }
        // every vertex of positive rank has an incoming arrow
        std::set<std::string> targets;
        for (const auto& arrow : graph.arrows) targets.insert(arrow.to.to_string());
        for (std::size_t r = 1; r < graph.ranks.size(); ++r)
            for (const auto& v : graph.ranks[r]) CHECK(targets.count(v.to_string()));
    }
}

TEST_CASE("e after f is the identity") {
    Multicharge charge{{0, 2}, 4};
    for (int n = 0; n <= 4; ++n) {
        for (const auto& v : fock::testing::multipartitions_of(2, n)) {
            for (int i = 0; i < charge.e; ++i) {
                if (auto up = f_op(v, charge, i)) {
                    CHECK(up->rank() == v.rank() + 1);
                    CHECK(e_op(*up, charge, i) == v);
                }
                if (auto down = e_op(v, charge, i)) CHECK(f_op(*down, charge, i) == v);
            }
        }
    }
}

TEST_CASE("random removal paths all reach the highest weight vertex") {
    std::mt19937 rng(11);
    for (Multicharge charge : {Multicharge{{0, 0, 1}, 2}, Multicharge{{0, 2}, 4}}) {
        auto graph = crystal_graph(charge, 6);
        for (const auto& layer : graph.ranks)
            for (const auto& v : layer)
                for (int trial = 0; trial < 3; ++trial)
                    CHECK(fock::testing::random_path(v, charge, rng).has_value());
    }
}

TEST_CASE("membership test agrees with the generated layers") {
    for (Multicharge charge : {Multicharge{{0, 0, 1}, 2}, Multicharge{{0, 1}, 3},
                               Multicharge{{0, 1, 3}, 4}}) {
        for (int n = 0; n <= 5; ++n) {
            auto layer = names(uglov_set(charge, n));
            for (const auto& v :
                 fock::testing::multipartitions_of(charge.level(), n))
                CHECK(is_uglov(v, charge) == (layer.count(v.to_string()) > 0));
        }
    }
}

TEST_CASE("level-1 layers are the e-regular partitions") {
    auto layer = names(uglov_set(Multicharge{{0}, 2}, 4));
    CHECK(layer == std::set<std::string>{"4", "3.1"});
}

TEST_CASE("exports are deterministic and well-formed") {
    auto graph = crystal_graph(Multicharge{{0, 0, 1}, 2}, 2);
    CHECK(graph.to_dot() == crystal_graph(Multicharge{{0, 0, 1}, 2}, 2).to_dot());
    auto json = graph.to_json();
    CHECK(json.find("\"e\": 2") != std::string::npos);
    CHECK(json.find("\"charge\"") != std::string::npos);
    CHECK(json.find("\"ranks\"") != std::string::npos);
    CHECK(json.find("\"from\"") != std::string::npos);
    // field order fixed as e, charge, ranks, arrows
    CHECK(json.find("\"e\"") < json.find("\"charge\""));
    CHECK(json.find("\"charge\"") < json.find("\"ranks\""));
    CHECK(json.find("\"ranks\"") < json.find("\"arrows\""));
}
