#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rfcode/code.hpp"
#include "rfcode/graph.hpp"

namespace rfcode {

constexpr std::int64_t kMaxGridCells = 10'000'000;

// A constructor asked for more cells than the grid budget allows.
struct GridBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A dense labeled cell grid in dimension 1..3. Cell labels are codewords;
// everything outside the grid is implicitly the empty word. Storage is
// row-major with x fastest: index = x + ex*(y + ey*z).
class GridRealization {
public:
    GridRealization(int dim, std::array<int, 3> extents, int n);

    int dim() const { return dim_; }
    int neuron_count() const { return n_; }
    const std::array<int, 3>& extents() const { return extents_; }
    std::int64_t cell_count() const { return static_cast<std::int64_t>(labels_.size()); }

    Codeword at(std::int64_t idx) const { return labels_[static_cast<std::size_t>(idx)]; }
    Codeword at(int x, int y = 0, int z = 0) const { return labels_[index(x, y, z)]; }
    void set(int x, int y, int z, Codeword w) { labels_[index(x, y, z)] = w; }
    void set(std::int64_t idx, Codeword w) { labels_[static_cast<std::size_t>(idx)] = w; }

    std::int64_t index(int x, int y, int z) const {
        return x + static_cast<std::int64_t>(extents_[0]) *
                       (y + static_cast<std::int64_t>(extents_[1]) * z);
    }
    std::array<int, 3> coords(std::int64_t idx) const;
    bool in_bounds(int x, int y, int z) const;

    // orthogonal neighbors inside the grid (4 in 2D, 6 in 3D)
    std::vector<std::int64_t> neighbors(std::int64_t idx) const;

    const std::vector<Codeword>& labels() const { return labels_; }

private:
    int dim_;
    std::array<int, 3> extents_;
    int n_;
    std::vector<Codeword> labels_;
};

// Labels occurring in the grid, plus the empty word for the outside region.
Code extract_code(const GridRealization& grid);

// U_i = cells whose label contains i; fields[i-1] is a sorted cell index list.
using FieldFamily = std::vector<std::vector<std::int64_t>>;
FieldFamily fields_from_atoms(const GridRealization& grid);

// Inverse direction: each cell's label collects the neurons whose field
// covers it.
GridRealization atoms_from_fields(const FieldFamily& fields, int dim,
                                  std::array<int, 3> extents);

struct AdjacencyViolation {
    std::int64_t cell_a = 0, cell_b = 0;         // orthogonally adjacent
    Codeword label_a, label_b;                   // incomparable pair
};

struct AdmissibilityResult {
    bool ok = false;
    std::vector<AdjacencyViolation> violations;
};

// Every orthogonally adjacent cell pair must carry comparable labels.
// Grid-boundary contact with the implicit outside region is always legal.
AdmissibilityResult check_admissible(const GridRealization& grid);

// U_i forms one orthogonally-connected component (empty fields pass).
bool field_connected(const GridRealization& grid, int neuron);
bool all_fields_connected(const GridRealization& grid);

// The graph of the realization: one vertex per connected component of each
// non-empty atom, edges between components sharing an orthogonal adjacency.
AdmissibleGraph realization_graph(const GridRealization& grid);

}  // namespace rfcode
