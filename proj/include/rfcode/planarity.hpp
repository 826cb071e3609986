#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace rfcode {

// Undirected simple graph on vertices 0..vertex_count-1.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;      // a < b recommended; loops forbidden
};

// Combinatorial embedding: per vertex, the cyclic order of its neighbors.
struct Embedding {
    std::vector<std::vector<int>> rotation;
    int face_count = 0;                          // outer face shared across components
};

struct KuratowskiWitness {
    enum class Kind { K5, K33 };
    Kind kind = Kind::K5;
    std::vector<std::pair<int, int>> edges;      // a subdivision of K5 or K3,3
};

using PlanarityResult = std::variant<Embedding, KuratowskiWitness>;

// Deterministic planarity decision with a checkable certificate either way.
PlanarityResult is_planar(const SimpleGraph& g);

// Boolean-only test without certificate extraction, for search pruning.
bool is_planar_quick(const SimpleGraph& g);

// Certificate checks. Both are independent of the decision procedure:
// verify_embedding traces faces through the rotation system and checks
// Euler's formula per component; verify_kuratowski suppresses degree-2
// vertices and matches the result against K5 / K3,3.
bool verify_embedding(const SimpleGraph& g, const Embedding& emb);
bool verify_kuratowski(const SimpleGraph& g, const KuratowskiWitness& w);

struct GridPoint {
    std::int64_t x = 0, y = 0;
    friend bool operator==(GridPoint a, GridPoint b) = default;
};

// Straight-line crossing-free drawing on an integer grid of side O(V).
// Disconnected inputs are laid out component by component. Throws
// InternalError on a malformed rotation system.
std::vector<GridPoint> planar_coordinates(const SimpleGraph& g, const Embedding& emb);

// Augmentation of a planar graph (V >= 3) to a maximal planar supergraph,
// with its embedding and a canonical vertex ordering. The ordering is an
// st-numbering of the triangulation: the first two vertices and the last
// one bound the outer face.
struct Triangulation {
    std::vector<std::pair<int, int>> edges;      // includes the original edges
    std::vector<std::vector<int>> rotation;
    std::vector<int> order;                      // canonical ordering, size V
};
Triangulation triangulate(const SimpleGraph& g);

// True when no two segments intersect outside shared endpoints (collinear
// overlap through a shared endpoint also counts as a crossing).
bool drawing_is_plane(const SimpleGraph& g, const std::vector<GridPoint>& coords);

}  // namespace rfcode
