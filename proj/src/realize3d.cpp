#include "rfcode/realize3d.hpp"

#include <algorithm>
#include <string>

namespace rfcode {

Realization3D build_3d(const Code& code) {
    auto conn = is_connected_code(code);
    if (!conn.connected) throw NotConnectedError(*conn.witness);

    std::vector<Codeword> words;
    for (Codeword w : code.words())
        if (!w.is_empty()) words.push_back(w);
    int k = static_cast<int>(words.size());

    // tubes: one per strict containment pair, in sorted pair order
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t)
            if (s != t && words[static_cast<std::size_t>(s)].strict_subset_of(words[static_cast<std::size_t>(t)]))
                pairs.emplace_back(s, t);
    std::sort(pairs.begin(), pairs.end());
    int tube_count = static_cast<int>(pairs.size());

    // ball layout: a bar of 2*deg+1 cells per word, ports at odd offsets,
    // bars separated by a two-cell gap
    std::vector<int> degree(static_cast<std::size_t>(k), 0);
    for (auto [s, t] : pairs) {
        ++degree[static_cast<std::size_t>(s)];
        ++degree[static_cast<std::size_t>(t)];
    }
    std::vector<int> base(static_cast<std::size_t>(k), 0);
    int x_total = 0;
    for (int w = 0; w < k; ++w) {
        base[static_cast<std::size_t>(w)] = x_total;
        x_total += 2 * degree[static_cast<std::size_t>(w)] + 1 + 2;
    }
    if (k > 0) x_total -= 2;                     // no gap after the last bar

    int ex = std::max(1, x_total);
    int ey = tube_count > 0 ? 3 : 1;
    int ez = 2 * tube_count + 1;
    std::int64_t cells = static_cast<std::int64_t>(ex) * ey * ez;
    if (cells > kMaxGridCells)
        throw GridBudgetError("3d grid would need " + std::to_string(cells) +
                              " cells (extents " + std::to_string(ex) + "x" +
                              std::to_string(ey) + "x" + std::to_string(ez) +
                              ", " + std::to_string(tube_count) + " tubes)");

    GridRealization grid(3, {ex, ey, ez}, code.neuron_count());
    Realization3D out{std::move(grid), {}, {}, {}};
    out.ball_cells.resize(static_cast<std::size_t>(k));

    for (int w = 0; w < k; ++w) {
        for (int dx = 0; dx <= 2 * degree[static_cast<std::size_t>(w)]; ++dx) {
            int x = base[static_cast<std::size_t>(w)] + dx;
            out.grid.set(x, 0, 0, words[static_cast<std::size_t>(w)]);
            out.ball_cells[static_cast<std::size_t>(w)].push_back(out.grid.index(x, 0, 0));
        }
    }

    std::vector<int> next_port(static_cast<std::size_t>(k), 0);
    auto take_port = [&](int w) {
        int slot = next_port[static_cast<std::size_t>(w)]++;
        return base[static_cast<std::size_t>(w)] + 2 * slot + 1;
    };

    for (int t = 0; t < tube_count; ++t) {
        auto [s, g] = pairs[static_cast<std::size_t>(t)];
        Codeword label = words[static_cast<std::size_t>(s)];
        int p = take_port(s);
        int q = take_port(g);
        int top = 2 * (t + 1);
        std::vector<std::int64_t> cells_of_tube;
        auto paint = [&](int x, int y, int z) {
            out.grid.set(x, y, z, label);
            cells_of_tube.push_back(out.grid.index(x, y, z));
        };
        for (int z = 1; z <= top; ++z) paint(p, 0, z);       // riser above the subset bar
        paint(p, 1, top);
        int lo = std::min(p, q), hi = std::max(p, q);
        for (int x = lo; x <= hi; ++x) paint(x, 2, top);     // private horizontal layer
        paint(q, 1, top);
        for (int z = top; z >= 1; --z) paint(q, 0, z);       // descender onto the superset bar
        out.tube_pairs.emplace_back(label, words[static_cast<std::size_t>(g)]);
        out.tube_cells.push_back(std::move(cells_of_tube));
    }
    return out;
}

}  // namespace rfcode
