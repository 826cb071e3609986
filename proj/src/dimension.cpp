#include "rfcode/dimension.hpp"

#include "rfcode/realize2d.hpp"

namespace rfcode {

namespace {

void require_grid_realizes(const GridRealization& grid, const Code& code, const char* what) {
    if (!check_admissible(grid).ok)
        throw InternalError(std::string(what) + ": certificate grid is not admissible");
    if (!all_fields_connected(grid))
        throw InternalError(std::string(what) + ": certificate grid has a disconnected field");
    if (!(extract_code(grid) == code))
        throw InternalError(std::string(what) + ": certificate grid extracts a different code");
}

}  // namespace

DStarResult d_star(const Code& code, const DStarOptions& opts) {
    auto conn = is_connected_code(code);
    if (!conn.connected) return NotConnectedVerdict{*conn.witness};

    WordSearchResult wr = search_word(code);
    if (auto* word = std::get_if<AtomWord>(&wr)) {
        if (!verify_word(code, *word))
            throw InternalError("d_star: found word fails verification");
        DimensionVerdict v;
        v.value = 1;
        v.exactness = Exactness::Exact;
        v.word = *word;
        return v;
    }

    PlanarSearchResult pr = search_planar_admissible(code, {opts.dup_bound, opts.budget});
    if (auto* found = std::get_if<PlanarFound>(&pr)) {
        PlanarCertificate cert{found->graph, found->embedding,
                               planar_coordinates(found->graph.skeleton(), found->embedding),
                               GridRealization(2, {1, 1, 1}, code.neuron_count())};
        cert.grid = fatten_embedding(code, cert.graph, cert.coords);
        require_grid_realizes(cert.grid, code, "d_star(2)");
        if (!validate(realization_graph(cert.grid), code).ok)
            throw InternalError("d_star(2): realization graph fails validation");
        DimensionVerdict v;
        v.value = 2;
        v.exactness = Exactness::Exact;
        v.planar = std::move(cert);
        return v;
    }

    Realization3D real3 = build_3d(code);
    require_grid_realizes(real3.grid, code, "d_star(3)");
    if (auto* exhausted = std::get_if<ExhaustedNotFound>(&pr)) {
        DimensionVerdict v;
        v.value = 3;
        v.exactness = Exactness::ConditionalOnBound;
        v.dup_bound = opts.dup_bound;
        v.real3 = std::move(real3);
        (void)exhausted;
        return v;
    }
    return Undecided23{std::get<SearchBudgetExceeded>(pr).nodes, std::move(real3)};
}

}  // namespace rfcode
