#pragma once

#include <stdexcept>
#include <vector>

#include "rfcode/code.hpp"
#include "rfcode/graph.hpp"
#include "rfcode/grid.hpp"
#include "rfcode/planarity.hpp"

namespace rfcode {

struct RasterizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rasterizes a validated planar admissible graph into a 2D grid: vertices
// become labeled blocks, edges become one-cell-wide staircase connectors
// carrying the containment-smaller label (the connector belongs to the
// smaller atom; it touches the superset block and the empty sea, both
// comparable). Scale and block sizes grow under a bounded retry loop; the
// result is certified by the grid oracle before being returned.
// Throws InternalError on precondition breach, RasterizationError when the
// retries are exhausted, GridBudgetError when the grid would be too large.
GridRealization fatten_embedding(const Code& code, const AdmissibleGraph& graph,
                                 const std::vector<GridPoint>& coords);

}  // namespace rfcode
