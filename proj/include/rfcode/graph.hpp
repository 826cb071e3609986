#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rfcode/code.hpp"
#include "rfcode/planarity.hpp"

namespace rfcode {

// Abstract candidate for the graph of a realization: vertices carry codeword
// labels (repeats = several components of one atom), edges join vertices
// whose labels are related by strict containment.
struct AdmissibleGraph {
    int n = 0;                                   // neuron count context
    std::vector<Codeword> labels;
    std::vector<std::pair<int, int>> edges;      // a < b, sorted, unique

    int vertex_count() const { return static_cast<int>(labels.size()); }
    SimpleGraph skeleton() const { return {vertex_count(), edges}; }
};

// One vertex per non-empty codeword, edges = all strict containment pairs.
// Throws NotConnectedError when the code fails the chain condition.
AdmissibleGraph canonical_graph(const Code& code);

struct GraphViolation {
    enum class Kind { MissingCodeword, ForeignLabel, IncomparableEdge, NeuronDisconnected };
    Kind kind;
    Codeword word;                               // Missing/Foreign
    std::pair<int, int> edge{-1, -1};            // IncomparableEdge
    int neuron = 0;                              // NeuronDisconnected
    std::string describe() const;
};

struct ValidationResult {
    bool ok = false;
    std::optional<GraphViolation> violation;     // first failure in check order
};

// Label coverage, edge comparability, and per-neuron induced connectivity.
ValidationResult validate(const AdmissibleGraph& graph, const Code& code);

struct PlanarFound {
    AdmissibleGraph graph;
    Embedding embedding;
};
struct ExhaustedNotFound {
    std::int64_t nodes = 0;
};
struct SearchBudgetExceeded {
    std::int64_t nodes = 0;
};
using PlanarSearchResult = std::variant<PlanarFound, ExhaustedNotFound, SearchBudgetExceeded>;

struct SearchOptions {
    int dup_bound = 2;                           // copies per codeword, 1..dup_bound
    std::int64_t budget = 1'000'000;             // candidate graphs examined
};

// Searches multiplicity assignments x edge subsets of the comparable pairs
// for a planar graph that validates against the code. Starts from the full
// comparable-edge set of each multiplicity vector and deletes edges guided
// by Kuratowski witnesses; the branching is systematic, so a negative
// answer is exhaustive for the given bound. Deterministic.
PlanarSearchResult search_planar_admissible(const Code& code, const SearchOptions& opts = {});

// Labeled-graph isomorphism (vertices may only map to equal labels).
// Intended for the small graphs this library produces.
bool labeled_isomorphic(const AdmissibleGraph& a, const AdmissibleGraph& b);

}  // namespace rfcode
