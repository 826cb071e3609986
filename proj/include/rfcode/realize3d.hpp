#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rfcode/code.hpp"
#include "rfcode/grid.hpp"

namespace rfcode {

// Construction record: the grid plus the tube/ball anatomy, so audits can
// check tube disjointness and contact patterns directly.
struct Realization3D {
    GridRealization grid;
    std::vector<std::pair<Codeword, Codeword>> tube_pairs;   // (subset, superset)
    std::vector<std::vector<std::int64_t>> tube_cells;       // per tube, cell indices
    std::vector<std::vector<std::int64_t>> ball_cells;       // per non-empty codeword
};

// One ball (a bar of cells, one port per incident tube) per non-empty
// codeword on the ground line, and one orthogonal tube per strict
// containment pair, each tube running at its own height so disjointness
// holds by construction. Tube cells carry the subset's label.
// Throws NotConnectedError / GridBudgetError.
Realization3D build_3d(const Code& code);

}  // namespace rfcode
