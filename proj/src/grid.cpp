#include "rfcode/grid.hpp"

#include <algorithm>
#include <map>

namespace rfcode {

GridRealization::GridRealization(int dim, std::array<int, 3> extents, int n)
    : dim_(dim), extents_(extents), n_(n) {
    if (dim < 1 || dim > 3) throw InternalError("grid dimension must be 1..3");
    if (n < 1 || n > kMaxNeurons) throw InternalError("grid neuron count out of range");
    for (int d = dim; d < 3; ++d)
        if (extents_[d] != 1) throw InternalError("unused grid axes must have extent 1");
    std::int64_t cells = 1;
    for (int d = 0; d < 3; ++d) {
        if (extents_[d] < 1) throw InternalError("grid extents must be positive");
        cells *= extents_[d];
    }
    if (cells > kMaxGridCells) throw InternalError("grid exceeds the cell budget");
    labels_.assign(static_cast<std::size_t>(cells), Codeword::empty());
}

std::array<int, 3> GridRealization::coords(std::int64_t idx) const {
    int x = static_cast<int>(idx % extents_[0]);
    idx /= extents_[0];
    int y = static_cast<int>(idx % extents_[1]);
    int z = static_cast<int>(idx / extents_[1]);
    return {x, y, z};
}

bool GridRealization::in_bounds(int x, int y, int z) const {
    return x >= 0 && x < extents_[0] && y >= 0 && y < extents_[1] && z >= 0 && z < extents_[2];
}

std::vector<std::int64_t> GridRealization::neighbors(std::int64_t idx) const {
    auto [x, y, z] = coords(idx);
    std::vector<std::int64_t> out;
    out.reserve(2 * dim_);
    static constexpr int dx[6] = {-1, 1, 0, 0, 0, 0};
    static constexpr int dy[6] = {0, 0, -1, 1, 0, 0};
    static constexpr int dz[6] = {0, 0, 0, 0, -1, 1};
    for (int k = 0; k < 2 * dim_; ++k)
        if (in_bounds(x + dx[k], y + dy[k], z + dz[k]))
            out.push_back(index(x + dx[k], y + dy[k], z + dz[k]));
    return out;
}

Code extract_code(const GridRealization& grid) {
    std::vector<Codeword> words(grid.labels());
    words.push_back(Codeword::empty());          // the outside region
    return Code(grid.neuron_count(), std::move(words));
}

FieldFamily fields_from_atoms(const GridRealization& grid) {
    FieldFamily fields(static_cast<std::size_t>(grid.neuron_count()));
    for (std::int64_t idx = 0; idx < grid.cell_count(); ++idx) {
        Codeword w = grid.at(idx);
        for (int i : w.neurons()) fields[static_cast<std::size_t>(i - 1)].push_back(idx);
    }
    return fields;
}

GridRealization atoms_from_fields(const FieldFamily& fields, int dim,
                                  std::array<int, 3> extents) {
    GridRealization grid(dim, extents, std::max<int>(1, static_cast<int>(fields.size())));
    for (std::size_t i = 0; i < fields.size(); ++i) {
        for (std::int64_t idx : fields[i]) {
            if (idx < 0 || idx >= grid.cell_count())
                throw InternalError("field cell index outside the grid");
            grid.set(idx, grid.at(idx).with(static_cast<int>(i) + 1));
        }
    }
    return grid;
}

AdmissibilityResult check_admissible(const GridRealization& grid) {
    AdmissibilityResult res;
    auto ex = grid.extents();
    for (std::int64_t idx = 0; idx < grid.cell_count(); ++idx) {
        auto [x, y, z] = grid.coords(idx);
        Codeword a = grid.at(idx);
        // forward neighbors only, so each pair is reported once
        static constexpr int step[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int d = 0; d < grid.dim(); ++d) {
            int nx = x + step[d][0], ny = y + step[d][1], nz = z + step[d][2];
            if (nx >= ex[0] || ny >= ex[1] || nz >= ex[2]) continue;
            Codeword b = grid.at(nx, ny, nz);
            if (!a.comparable(b))
                res.violations.push_back({idx, grid.index(nx, ny, nz), a, b});
        }
    }
    res.ok = res.violations.empty();
    return res;
}

namespace {

// Flood fill over cells selected by `keep`, components numbered from 0 in
// order of their smallest cell index.
std::vector<int> label_components(const GridRealization& grid,
                                  const std::vector<char>& keep, int& count) {
    std::vector<int> comp(static_cast<std::size_t>(grid.cell_count()), -1);
    count = 0;
    std::vector<std::int64_t> stack;
    for (std::int64_t seed = 0; seed < grid.cell_count(); ++seed) {
        if (!keep[static_cast<std::size_t>(seed)] || comp[static_cast<std::size_t>(seed)] != -1)
            continue;
        comp[static_cast<std::size_t>(seed)] = count;
        stack.push_back(seed);
        while (!stack.empty()) {
            std::int64_t cur = stack.back();
            stack.pop_back();
            for (std::int64_t nb : grid.neighbors(cur)) {
                if (keep[static_cast<std::size_t>(nb)] &&
                    comp[static_cast<std::size_t>(nb)] == -1) {
                    comp[static_cast<std::size_t>(nb)] = count;
                    stack.push_back(nb);
                }
            }
        }
        ++count;
    }
    return comp;
}

}  // namespace

bool field_connected(const GridRealization& grid, int neuron) {
    std::vector<char> keep(static_cast<std::size_t>(grid.cell_count()));
    bool any = false;
    for (std::int64_t idx = 0; idx < grid.cell_count(); ++idx) {
        keep[static_cast<std::size_t>(idx)] = grid.at(idx).contains(neuron);
        any |= keep[static_cast<std::size_t>(idx)] != 0;
    }
    if (!any) return true;                       // empty field is vacuously connected
    int count = 0;
    label_components(grid, keep, count);
    return count == 1;
}

bool all_fields_connected(const GridRealization& grid) {
    for (int i = 1; i <= grid.neuron_count(); ++i)
        if (!field_connected(grid, i)) return false;
    return true;
}

AdmissibleGraph realization_graph(const GridRealization& grid) {
    // components of equal-label cells; the empty atom is not a vertex
    std::vector<char> keep(static_cast<std::size_t>(grid.cell_count()));
    for (std::int64_t idx = 0; idx < grid.cell_count(); ++idx)
        keep[static_cast<std::size_t>(idx)] = !grid.at(idx).is_empty();

    std::vector<int> comp(static_cast<std::size_t>(grid.cell_count()), -1);
    std::vector<Codeword> comp_label;
    std::vector<std::int64_t> stack;
    for (std::int64_t seed = 0; seed < grid.cell_count(); ++seed) {
        if (!keep[static_cast<std::size_t>(seed)] || comp[static_cast<std::size_t>(seed)] != -1)
            continue;
        int id = static_cast<int>(comp_label.size());
        Codeword label = grid.at(seed);
        comp_label.push_back(label);
        comp[static_cast<std::size_t>(seed)] = id;
        stack.push_back(seed);
        while (!stack.empty()) {
            std::int64_t cur = stack.back();
            stack.pop_back();
            for (std::int64_t nb : grid.neighbors(cur)) {
                if (comp[static_cast<std::size_t>(nb)] == -1 && grid.at(nb) == label) {
                    comp[static_cast<std::size_t>(nb)] = id;
                    stack.push_back(nb);
                }
            }
        }
    }

    // order vertices by (label, discovery); discovery order is already by
    // smallest cell index
    std::vector<int> order(comp_label.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return word_less(comp_label[static_cast<std::size_t>(a)],
                         comp_label[static_cast<std::size_t>(b)]);
    });
    std::vector<int> rank(comp_label.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    AdmissibleGraph g;
    g.n = grid.neuron_count();
    g.labels.resize(comp_label.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        g.labels[i] = comp_label[static_cast<std::size_t>(order[i])];

    std::map<std::pair<int, int>, bool> seen;
    auto ex = grid.extents();
    for (std::int64_t idx = 0; idx < grid.cell_count(); ++idx) {
        int ca = comp[static_cast<std::size_t>(idx)];
        if (ca == -1) continue;
        auto [x, y, z] = grid.coords(idx);
        static constexpr int step[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int d = 0; d < grid.dim(); ++d) {
            int nx = x + step[d][0], ny = y + step[d][1], nz = z + step[d][2];
            if (nx >= ex[0] || ny >= ex[1] || nz >= ex[2]) continue;
            int cb = comp[static_cast<std::size_t>(grid.index(nx, ny, nz))];
            if (cb == -1 || cb == ca) continue;
            int a = std::min(rank[static_cast<std::size_t>(ca)], rank[static_cast<std::size_t>(cb)]);
            int b = std::max(rank[static_cast<std::size_t>(ca)], rank[static_cast<std::size_t>(cb)]);
            seen[{a, b}] = true;
        }
    }
    for (const auto& [e, _] : seen) g.edges.push_back(e);
    return g;
}

}  // namespace rfcode
