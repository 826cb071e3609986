#pragma once

#include <optional>
#include <variant>

#include "rfcode/code.hpp"
#include "rfcode/graph.hpp"
#include "rfcode/grid.hpp"
#include "rfcode/planarity.hpp"
#include "rfcode/realize1d.hpp"
#include "rfcode/realize3d.hpp"

namespace rfcode {

enum class Exactness { Exact, ConditionalOnBound };

struct PlanarCertificate {
    AdmissibleGraph graph;
    Embedding embedding;
    std::vector<GridPoint> coords;
    GridRealization grid;                        // the fattened 2D realization
};

// d* with its certificate. Dimension 3 is conditional: the planar search is
// exhaustive only up to the configured duplication bound.
struct DimensionVerdict {
    int value = 0;                               // 1 | 2 | 3
    Exactness exactness = Exactness::Exact;
    int dup_bound = 0;                           // set when ConditionalOnBound
    std::optional<AtomWord> word;                // value 1
    std::optional<PlanarCertificate> planar;     // value 2
    std::optional<Realization3D> real3;          // value 3
};

struct NotConnectedVerdict {
    ConnectivityWitness witness;
};

// The planar search ran out of budget: d* is 2 or 3, with the dimension-3
// certificate attached.
struct Undecided23 {
    std::int64_t nodes = 0;
    Realization3D real3;
};

using DStarResult = std::variant<DimensionVerdict, NotConnectedVerdict, Undecided23>;

struct DStarOptions {
    int dup_bound = 2;
    std::int64_t budget = 1'000'000;
};

// Dimension 1 by exact word search, dimension 2 by bounded planar
// certificate search, dimension 3 by the balls-and-tubes construction.
// Every certificate is re-verified before the verdict is returned.
DStarResult d_star(const Code& code, const DStarOptions& opts = {});

}  // namespace rfcode
