#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rfcode/realize1d.hpp"

using namespace rfcode;
using namespace rfcode::testing;

TEST_CASE("search_word on the four spec codes") {
    auto r1 = search_word(make_code("e,1,12,2"));
    auto* w1 = std::get_if<AtomWord>(&r1);
    REQUIRE(w1);
    CHECK(w1->entries == std::vector<Codeword>{w("1"), w("12"), w("2")});

    auto r2 = search_word(make_code("e,1,2,3,12,123"));
    CHECK(std::holds_alternative<NotRealizable1D>(r2));

    auto r3 = search_word(make_code("e,1"));
    auto* w3 = std::get_if<AtomWord>(&r3);
    REQUIRE(w3);
    CHECK(w3->entries == std::vector<Codeword>{w("1")});

    auto r4 = search_word(make_code("e,1,2"));
    auto* w4 = std::get_if<AtomWord>(&r4);
    REQUIRE(w4);
    CHECK(w4->entries == std::vector<Codeword>{w("1"), w(""), w("2")});
}

TEST_CASE("search_word requires a connected code") {
    CHECK_THROWS_AS(search_word(make_code("e,12,13")), NotConnectedError);
}

TEST_CASE("verify_word") {
    Code code = make_code("e,1,12,2");
    CHECK(verify_word(code, {{w("1"), w("12"), w("2")}}));
    CHECK_FALSE(verify_word(code, {{w("1"), w("2")}}));        // incomparable neighbors
    CHECK_FALSE(verify_word(make_code("e,1"), {{w("1"), w(""), w("1")}}));  // gap in neuron 1
    CHECK_FALSE(verify_word(code, {{w("1"), w("12")}}));       // word 2 missing
    CHECK_FALSE(verify_word(code, {{w("1"), w("12"), w("2"), w("23")}}));  // foreign entry
    CHECK_FALSE(verify_word(code, {{}}));
    // length cap: 2n+1
    Code tiny = parse_code("e,1", 1).code;
    CHECK_FALSE(verify_word(tiny, {{w("1"), w(""), w(""), w("")}}));
}

TEST_CASE("word_to_grid") {
    Code code = make_code("e,1,12,2");
    AtomWord word{{w("1"), w("12"), w("2")}};
    GridRealization g = word_to_grid(code, word);
    CHECK(g.dim() == 1);
    CHECK(g.cell_count() == 3);
    CHECK(g.at(1) == w("12"));
    CHECK(check_admissible(g).ok);
    CHECK(all_fields_connected(g));
    CHECK(extract_code(g) == code);

    CHECK_THROWS_AS(word_to_grid(code, AtomWord{{w("1")}}), InternalError);

    GridRealization single = word_to_grid(make_code("e,1"), AtomWord{{w("1")}});
    CHECK(single.cell_count() == 1);

    GridRealization sep = word_to_grid(make_code("e,1,2"), AtomWord{{w("1"), w(""), w("2")}});
    CHECK(sep.at(1) == w(""));
}

TEST_CASE("found words satisfy all invariants and realize on the line") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Codeword> sel;
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
            if (rng() & 1) sel.push_back({bits});
        Code code(n, sel);
        if (!is_connected_code(code).connected) continue;
        auto res = search_word(code);
        auto* word = std::get_if<AtomWord>(&res);
        if (!word) continue;
        CHECK(verify_word(code, *word));
        GridRealization g = word_to_grid(code, *word);
        CHECK(check_admissible(g).ok);
        CHECK(all_fields_connected(g));
        CHECK(extract_code(g) == code);
        // a repeated entry is always separated by a strict superset
        for (std::size_t p = 0; p < word->entries.size(); ++p)
            for (std::size_t q = p + 1; q < word->entries.size(); ++q) {
                if (!(word->entries[p] == word->entries[q])) continue;
                bool separated = false;
                for (std::size_t r = p + 1; r < q; ++r)
                    separated |= word->entries[p].strict_subset_of(word->entries[r]);
                CHECK(separated);
            }
    }
}

TEST_CASE("verdict matches the no-pruning enumeration on every code up to n=3") {
    for (int n = 1; n <= 3; ++n)
        for (const Code& code : all_codes(n)) {
            if (!is_connected_code(code).connected) continue;
            bool found = std::holds_alternative<AtomWord>(search_word(code));
            CHECK(found == oracle_word_exists(code));
        }
}

TEST_CASE("1D refusals are stable under neuron permutation") {
    std::mt19937_64 rng(3);
    Code base = make_code("e,1,2,3,12,123");
    for (int trial = 0; trial < 10; ++trial) {
        Code permuted = permute_neurons(base, random_permutation(3, rng));
        CHECK(std::holds_alternative<NotRealizable1D>(search_word(permuted)));
    }
}
