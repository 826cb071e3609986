#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rfcode/grid.hpp"

using namespace rfcode;
using namespace rfcode::testing;

namespace {

GridRealization line(const std::vector<Codeword>& cells, int n) {
    GridRealization g(1, {static_cast<int>(cells.size()), 1, 1}, n);
    for (std::size_t i = 0; i < cells.size(); ++i) g.set(static_cast<int>(i), 0, 0, cells[i]);
    return g;
}

GridRealization random_grid(std::mt19937_64& rng, int dim) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::array<int, 3> ex{1, 1, 1};
    for (int d = 0; d < dim; ++d) ex[static_cast<std::size_t>(d)] = 1 + static_cast<int>(rng() % 5);
    GridRealization g(dim, ex, n);
    std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (std::int64_t i = 0; i < g.cell_count(); ++i) g.set(i, Codeword{rng() & mask});
    return g;
}

}  // namespace

TEST_CASE("extract_code") {
    CHECK(extract_code(line({w("1"), w("12"), w("2")}, 2)) == make_code("e,1,12,2"));
    CHECK(extract_code(line({w(""), w(""), w("")}, 2)) == parse_code("e", 2).code);
}

TEST_CASE("fields_from_atoms") {
    FieldFamily f = fields_from_atoms(line({w("1"), w("12"), w("2")}, 2));
    CHECK(f[0] == std::vector<std::int64_t>{0, 1});
    CHECK(f[1] == std::vector<std::int64_t>{1, 2});

    FieldFamily empty = fields_from_atoms(line({w(""), w("")}, 3));
    for (const auto& field : empty) CHECK(field.empty());

    FieldFamily single = fields_from_atoms(line({w("123")}, 3));
    for (const auto& field : single) CHECK(field == std::vector<std::int64_t>{0});
}

TEST_CASE("atoms_from_fields") {
    FieldFamily f{{0, 1}, {1, 2}};
    GridRealization g = atoms_from_fields(f, 1, {3, 1, 1});
    CHECK(g.at(0, 0, 0) == w("1"));
    CHECK(g.at(1, 0, 0) == w("12"));
    CHECK(g.at(2, 0, 0) == w("2"));

    GridRealization whole = atoms_from_fields({{0, 1, 2}}, 1, {3, 1, 1});
    for (std::int64_t i = 0; i < 3; ++i) CHECK(whole.at(i) == w("1"));

    CHECK_THROWS_AS(atoms_from_fields({{5}}, 1, {3, 1, 1}), InternalError);
}

TEST_CASE("duality: the two conversions are exact inverses") {
    std::mt19937_64 rng(23);
    for (int dim = 1; dim <= 3; ++dim)
        for (int trial = 0; trial < 50; ++trial) {
            GridRealization g = random_grid(rng, dim);
            FieldFamily f = fields_from_atoms(g);
            GridRealization back = atoms_from_fields(f, g.dim(), g.extents());
            CHECK(back.labels() == g.labels());
            CHECK(extract_code(back) == extract_code(g));
            FieldFamily again = fields_from_atoms(back);
            CHECK(again == f);
        }
}

TEST_CASE("admissibility") {
    AdmissibilityResult bad = check_admissible(line({w("1"), w("2")}, 2));
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].cell_a == 0);
    CHECK(bad.violations[0].cell_b == 1);

    CHECK(check_admissible(line({w("1"), w("12"), w("2")}, 2)).ok);
    CHECK(check_admissible(line({w(""), w(""), w("")}, 2)).ok);
}

TEST_CASE("field connectivity") {
    CHECK_FALSE(field_connected(line({w("1"), w(""), w("1")}, 1), 1));
    CHECK(field_connected(line({w("1"), w("12"), w("2")}, 2), 2));
    CHECK(field_connected(line({w("1")}, 2), 2));  // empty field
}

TEST_CASE("realization graph of a line") {
    AdmissibleGraph g = realization_graph(line({w("1"), w("12"), w("2")}, 2));
    REQUIRE(g.vertex_count() == 3);
    CHECK(g.labels[0] == w("1"));
    CHECK(g.labels[1] == w("2"));
    CHECK(g.labels[2] == w("12"));
    REQUIRE(g.edges.size() == 2);  // the path 1 - 12 - 2

    AdmissibleGraph single = realization_graph(line({w("1")}, 1));
    CHECK(single.vertex_count() == 1);
    CHECK(single.edges.empty());

    // same-label cells joined orthogonally form one component
    GridRealization square(2, {2, 2, 1}, 1);
    square.set(0, 0, 0, w("1"));
    square.set(1, 0, 0, w("1"));
    square.set(0, 1, 0, w("1"));
    AdmissibleGraph comp = realization_graph(square);
    CHECK(comp.vertex_count() == 1);
}

TEST_CASE("admissible grids with connected fields extract connected codes") {
    std::mt19937_64 rng(31);
    int accepted = 0;
    for (int trial = 0; trial < 30000 && accepted < 120; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 2);
        int n = 1 + static_cast<int>(rng() % 3);
        std::array<int, 3> ex{1, 1, 1};
        for (int d = 0; d < dim; ++d) ex[static_cast<std::size_t>(d)] = 1 + static_cast<int>(rng() % 3);
        GridRealization g(dim, ex, n);
        std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        for (std::int64_t i = 0; i < g.cell_count(); ++i) g.set(i, Codeword{rng() & mask});
        if (!check_admissible(g).ok || !all_fields_connected(g)) continue;
        ++accepted;
        CHECK(is_connected_code(extract_code(g)).connected);
    }
    CHECK(accepted > 50);
}
