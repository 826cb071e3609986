#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rfcode/code.hpp"

using namespace rfcode;
using namespace rfcode::testing;

TEST_CASE("codeword order is cardinality then lexicographic") {
    CHECK(word_less(w(""), w("1")));
    CHECK(word_less(w("2"), w("12")));
    CHECK(word_less(w("13"), w("23")));
    CHECK(word_less(w("12"), w("13")));
    CHECK(word_less(w("14"), w("23")));
    CHECK_FALSE(word_less(w("23"), w("14")));
    CHECK_FALSE(word_less(w("12"), w("12")));
    // strict containment is transitive and asymmetric
    CHECK(w("1").strict_subset_of(w("12")));
    CHECK(w("12").strict_subset_of(w("123")));
    CHECK(w("1").strict_subset_of(w("123")));
    CHECK_FALSE(w("12").strict_subset_of(w("12")));
}

TEST_CASE("parse shorthand") {
    ParsedCode p = parse_code("e,1,2,3,4,12,13,23,24,123");
    CHECK(p.code.neuron_count() == 4);
    CHECK(p.code.size() == 10);
    CHECK_FALSE(p.inserted_empty);
    CHECK(p.code.contains(w("24")));
    CHECK(p.code.contains(w("123")));
    CHECK_FALSE(p.code.contains(w("14")));
}

TEST_CASE("parse empty-only and explicit n") {
    ParsedCode p = parse_code("e", 3);
    CHECK(p.code.neuron_count() == 3);
    CHECK(p.code.size() == 1);
}

TEST_CASE("parse the sixteen-word pair code") {
    ParsedCode p = parse_code("e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45");
    CHECK(p.code.size() == 16);
    CHECK(p.code.neuron_count() == 5);
}

TEST_CASE("parse brace syntax with multi-digit indices") {
    ParsedCode p = parse_code("{},{1},{1,12}");
    CHECK(p.code.neuron_count() == 12);
    CHECK(p.code.size() == 3);
    CHECK(p.code.contains(Codeword::single(1).with(12)));
}

TEST_CASE("parse errors and repairs") {
    CHECK_THROWS_AS(parse_code("e,0"), ParseError);
    CHECK_THROWS_AS(parse_code("e,1x"), ParseError);
    CHECK_THROWS_AS(parse_code("{65}"), ParseError);
    CHECK_THROWS_AS(parse_code("e,12", 1), ParseError);
    CHECK_THROWS_AS(parse_code(""), ParseError);
    ParsedCode repaired = parse_code("1,12");
    CHECK(repaired.inserted_empty);
    CHECK(repaired.code.size() == 3);
    ParsedCode deduped = parse_code("e,1,1");
    CHECK(deduped.duplicates_removed == 1);
    CHECK(deduped.code.size() == 2);
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<Codeword> sel;
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
            if (rng() & 1) sel.push_back({bits});
        Code code(n, sel);
        Code back = parse_code(serialize_code(code)).code;
        CHECK(back == code);
    }
}

TEST_CASE("neuron graphs of the ten-word code") {
    Code fig = make_code("e,1,2,3,4,12,13,23,24,123");
    NeuronGraph g4 = neuron_graph(fig, 4);
    REQUIRE(g4.vertices.size() == 2);
    CHECK(g4.vertices[0] == w("4"));
    CHECK(g4.vertices[1] == w("24"));
    CHECK(g4.edges.size() == 1);

    NeuronGraph g1 = neuron_graph(fig, 1);
    REQUIRE(g1.vertices.size() == 4);
    CHECK(g1.edges.size() == 5);  // 1-12, 1-13, 1-123, 12-123, 13-123

    Code tiny = make_code("e,1");
    NeuronGraph t = neuron_graph(tiny, 1);
    CHECK(t.vertices.size() == 1);
    CHECK(t.edges.empty());
}

TEST_CASE("connectivity verdicts") {
    CHECK(is_connected_code(make_code("e,1,2,3,4,12,13,23,24,123")).connected);
    CHECK(is_connected_code(make_code("e,1")).connected);
    CHECK(is_connected_code(make_code("e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45")).connected);

    ConnectivityResult r = is_connected_code(make_code("e,12,13"));
    REQUIRE_FALSE(r.connected);
    CHECK(r.witness->neuron == 1);
    CHECK(r.witness->a == w("12"));
    CHECK(r.witness->b == w("13"));
}

TEST_CASE("connectivity matches the chain oracle on every 3-neuron code") {
    for (const Code& code : all_codes(3))
        CHECK(is_connected_code(code).connected == oracle_connected(code));
}

TEST_CASE("connectivity is invariant under neuron permutations") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<Codeword> sel;
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
            if (rng() & 1) sel.push_back({bits});
        Code code(n, sel);
        Code permuted = permute_neurons(code, random_permutation(n, rng));
        CHECK(is_connected_code(code).connected == is_connected_code(permuted).connected);
    }
}

TEST_CASE("superset insertion keeps chain-connected neuron graphs connected") {
    std::mt19937_64 rng(7);
    auto connected_graph = [](const NeuronGraph& g) {
        if (g.vertices.size() <= 1) return true;
        std::vector<int> comp(g.vertices.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [a, b] : g.edges)
                if (comp[static_cast<std::size_t>(a)] != comp[static_cast<std::size_t>(b)]) {
                    int lo = std::min(comp[static_cast<std::size_t>(a)], comp[static_cast<std::size_t>(b)]);
                    comp[static_cast<std::size_t>(a)] = comp[static_cast<std::size_t>(b)] = lo;
                    changed = true;
                }
        }
        for (int c : comp)
            if (c != comp[0]) return false;
        return true;
    };
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::vector<Codeword> sel;
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
            if (rng() % 3 == 0) sel.push_back({bits});
        Code code(n, sel);
        if (code.size() < 2) continue;
        // pick an existing word and insert a superset of it
        const auto& words = code.words();
        Codeword sigma = words[1 + rng() % (words.size() - 1)];
        Codeword tau{sigma.bits | (std::uint64_t{1} << (rng() % static_cast<std::uint64_t>(n)))};
        std::vector<Codeword> grown(words.begin(), words.end());
        grown.push_back(tau);
        Code bigger(n, grown);
        for (int i : sigma.neurons())
            if (connected_graph(neuron_graph(code, i)))
                CHECK(connected_graph(neuron_graph(bigger, i)));
    }
}
