#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rfcode/graph.hpp"
#include "rfcode/planarity.hpp"

using namespace rfcode;
using namespace rfcode::testing;

namespace {

SimpleGraph complete(int v) {
    SimpleGraph g{v, {}};
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) g.edges.emplace_back(a, b);
    return g;
}

SimpleGraph k33() {
    SimpleGraph g{6, {}};
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) g.edges.emplace_back(a, b);
    return g;
}

}  // namespace

TEST_CASE("K5 yields a K5 witness") {
    PlanarityResult r = is_planar(complete(5));
    auto* witness = std::get_if<KuratowskiWitness>(&r);
    REQUIRE(witness);
    CHECK(witness->kind == KuratowskiWitness::Kind::K5);
    CHECK(witness->edges.size() == 10);
    CHECK(verify_kuratowski(complete(5), *witness));
}

TEST_CASE("K3,3 yields a K3,3 witness") {
    PlanarityResult r = is_planar(k33());
    auto* witness = std::get_if<KuratowskiWitness>(&r);
    REQUIRE(witness);
    CHECK(witness->kind == KuratowskiWitness::Kind::K33);
    CHECK(verify_kuratowski(k33(), *witness));
}

TEST_CASE("K4 embeds with four faces") {
    PlanarityResult r = is_planar(complete(4));
    auto* emb = std::get_if<Embedding>(&r);
    REQUIRE(emb);
    CHECK(emb->face_count == 4);
    CHECK(verify_embedding(complete(4), *emb));
}

TEST_CASE("embedding face counts on paths, trees and disconnected graphs") {
    SimpleGraph path{3, {{0, 1}, {1, 2}}};
    auto rp = is_planar(path);
    auto* emb = std::get_if<Embedding>(&rp);
    REQUIRE(emb);
    CHECK(emb->face_count == 1);

    SimpleGraph two_triangles{6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}};
    auto r = is_planar(two_triangles);
    auto* emb2 = std::get_if<Embedding>(&r);
    REQUIRE(emb2);
    CHECK(verify_embedding(two_triangles, *emb2));
    CHECK(emb2->face_count == 3);  // two inner faces plus the shared outer face

    SimpleGraph isolated{2, {}};
    auto r3 = is_planar(isolated);
    auto* emb3 = std::get_if<Embedding>(&r3);
    REQUIRE(emb3);
    CHECK(verify_embedding(isolated, *emb3));
}

TEST_CASE("the pair code's canonical graph has a K5 witness") {
    AdmissibleGraph g =
        canonical_graph(make_code("e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45"));
    PlanarityResult r = is_planar(g.skeleton());
    auto* witness = std::get_if<KuratowskiWitness>(&r);
    REQUIRE(witness);
    CHECK(witness->kind == KuratowskiWitness::Kind::K5);
    CHECK(verify_kuratowski(g.skeleton(), *witness));
}

TEST_CASE("verify_kuratowski rejects junk") {
    SimpleGraph g = complete(5);
    KuratowskiWitness bogus{KuratowskiWitness::Kind::K5, {{0, 1}, {1, 2}, {0, 2}}};
    CHECK_FALSE(verify_kuratowski(g, bogus));
    KuratowskiWitness foreign{KuratowskiWitness::Kind::K5, {{0, 7}}};
    CHECK_FALSE(verify_kuratowski(g, foreign));
}

TEST_CASE("exhaustive agreement with the pattern oracle on five vertices") {
    for (int mask = 0; mask < (1 << 10); ++mask) {
        SimpleGraph g{5, {}};
        int bit = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b, ++bit)
                if (mask >> bit & 1) g.edges.emplace_back(a, b);
        PlanarityResult r = is_planar(g);
        bool planar = std::holds_alternative<Embedding>(r);
        CHECK(planar == oracle_planar6(g));
        if (planar)
            CHECK(verify_embedding(g, std::get<Embedding>(r)));
        else
            CHECK(verify_kuratowski(g, std::get<KuratowskiWitness>(r)));
    }
}

TEST_CASE("witnesses on random graphs always verify") {
    std::mt19937_64 rng(99);
    int nonplanar = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int v = 6 + static_cast<int>(rng() % 5);
        SimpleGraph g{v, {}};
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (rng() % 100 < 55) g.edges.emplace_back(a, b);
        PlanarityResult r = is_planar(g);
        if (auto* witness = std::get_if<KuratowskiWitness>(&r)) {
            ++nonplanar;
            CHECK(verify_kuratowski(g, *witness));
        } else {
            CHECK(verify_embedding(g, std::get<Embedding>(r)));
            CHECK(static_cast<int>(g.edges.size()) <= std::max(1, 3 * v - 6));
        }
    }
    CHECK(nonplanar > 100);
}

TEST_CASE("planar coordinates of small graphs") {
    SimpleGraph triangle = complete(3);
    auto emb = std::get<Embedding>(is_planar(triangle));
    auto pts = planar_coordinates(triangle, emb);
    REQUIRE(pts.size() == 3);
    auto area2 = (pts[1].x - pts[0].x) * (pts[2].y - pts[0].y) -
                 (pts[1].y - pts[0].y) * (pts[2].x - pts[0].x);
    CHECK(area2 != 0);  // non-collinear
    CHECK(drawing_is_plane(triangle, pts));

    SimpleGraph k4 = complete(4);
    auto emb4 = std::get<Embedding>(is_planar(k4));
    auto pts4 = planar_coordinates(k4, emb4);
    CHECK(drawing_is_plane(k4, pts4));

    AdmissibleGraph five = canonical_graph(make_code("e,1,2,3,12,123"));
    auto embf = std::get<Embedding>(is_planar(five.skeleton()));
    auto ptsf = planar_coordinates(five.skeleton(), embf);
    REQUIRE(ptsf.size() == 5);
    CHECK(drawing_is_plane(five.skeleton(), ptsf));
}

TEST_CASE("planar coordinates lay out disconnected and degenerate graphs") {
    SimpleGraph mixed{6, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}};  // edge + triangle + isolated vertex
    auto emb = std::get<Embedding>(is_planar(mixed));
    auto pts = planar_coordinates(mixed, emb);
    CHECK(drawing_is_plane(mixed, pts));

    SimpleGraph empty_graph{0, {}};
    auto embe = std::get<Embedding>(is_planar(empty_graph));
    CHECK(planar_coordinates(empty_graph, embe).empty());
}

TEST_CASE("coordinates live on a grid of side linear in the vertex count") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        int v = 3 + static_cast<int>(rng() % 12);
        SimpleGraph g{v, {}};
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (rng() % 100 < 30) g.edges.emplace_back(a, b);
        PlanarityResult r = is_planar(g);
        auto* emb = std::get_if<Embedding>(&r);
        if (!emb) continue;
        auto pts = planar_coordinates(g, *emb);
        CHECK(drawing_is_plane(g, pts));
        for (GridPoint p : pts) {
            CHECK(p.x >= 0);
            CHECK(p.y >= 0);
            CHECK(p.x <= 4 * v);
            CHECK(p.y <= 4 * v);
        }
    }
}

TEST_CASE("malformed rotation systems are rejected") {
    SimpleGraph path{3, {{0, 1}, {1, 2}}};
    Embedding bad;
    bad.rotation = {{1}, {0}, {}};  // vertex 1 forgets neighbor 2
    CHECK_THROWS_AS(planar_coordinates(path, bad), InternalError);
    CHECK_FALSE(verify_embedding(path, bad));
}
