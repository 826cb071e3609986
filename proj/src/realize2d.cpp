#include "rfcode/realize2d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace rfcode {

namespace {

struct Cell {
    std::int64_t x, y;
    friend bool operator==(Cell, Cell) = default;
};

// All cells the open segment between the two cell centers passes through,
// as a 4-connected chain. Exact corner crossings insert the x-step cell
// first to keep orthogonal connectivity.
std::vector<Cell> supercover(Cell a, Cell b) {
    std::int64_t dx = std::llabs(b.x - a.x), dy = std::llabs(b.y - a.y);
    std::int64_t sx = b.x > a.x ? 1 : -1, sy = b.y > a.y ? 1 : -1;
    std::vector<Cell> out;
    Cell cur = a;
    out.push_back(cur);
    std::int64_t ix = 0, iy = 0;
    while (ix < dx || iy < dy) {
        std::int64_t tx = (2 * ix + 1) * dy;
        std::int64_t ty = (2 * iy + 1) * dx;
        if (iy >= dy || (ix < dx && tx < ty)) {
            cur.x += sx;
            ++ix;
        } else if (ix >= dx || tx > ty) {
            cur.y += sy;
            ++iy;
        } else {
            out.push_back({cur.x + sx, cur.y});
            cur.x += sx;
            cur.y += sy;
            ++ix;
            ++iy;
        }
        out.push_back(cur);
    }
    return out;
}

constexpr int kBlockOwnerBase = 1 << 24;

struct Raster {
    std::int64_t min_x = 0, min_y = 0;
    int width = 0, height = 0;
    std::vector<Codeword> label;
    std::vector<int> owner;                      // edge index, or kBlockOwnerBase + vertex

    std::size_t idx(Cell c) const {
        return static_cast<std::size_t>((c.x - min_x) + static_cast<std::int64_t>(width) * (c.y - min_y));
    }
};

struct Failure {
    enum class Kind { Scale, GrowVertex } kind = Kind::Scale;
    int vertex = -1;
};

// Returns the shared endpoint of two edges, or -1.
int shared_vertex(const AdmissibleGraph& g, int e1, int e2) {
    auto [a1, b1] = g.edges[static_cast<std::size_t>(e1)];
    auto [a2, b2] = g.edges[static_cast<std::size_t>(e2)];
    if (a1 == a2 || a1 == b2) return a1;
    if (b1 == a2 || b1 == b2) return b1;
    return -1;
}

// Interprets a pair of conflicting owners: growing the shared vertex block
// separates same-vertex connector crowding; everything else needs scale.
Failure classify(const AdmissibleGraph& g, int o1, int o2) {
    bool block1 = o1 >= kBlockOwnerBase, block2 = o2 >= kBlockOwnerBase;
    if (!block1 && !block2) {
        int v = shared_vertex(g, o1, o2);
        if (v != -1) return {Failure::Kind::GrowVertex, v};
    }
    return {Failure::Kind::Scale, -1};
}

double point_segment_distance(GridPoint p, GridPoint a, GridPoint b) {
    double ax = static_cast<double>(a.x), ay = static_cast<double>(a.y);
    double bx = static_cast<double>(b.x), by = static_cast<double>(b.y);
    double px = static_cast<double>(p.x), py = static_cast<double>(p.y);
    double dx = bx - ax, dy = by - ay;
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    double qx = ax + t * dx - px, qy = ay + t * dy - py;
    return std::sqrt(qx * qx + qy * qy);
}

// Connectors leaving one vertex at angle theta separate by about r*sin(theta)
// at ring radius r, so incomparable pairs dictate the block radius; vertex
// and edge clearances in the drawing then dictate the scale.
void plan_layout(const AdmissibleGraph& graph, const std::vector<GridPoint>& coords,
                 const std::vector<Codeword>& edge_label, std::vector<std::int64_t>* radius,
                 std::int64_t* scale) {
    int v_count = graph.vertex_count();
    radius->assign(static_cast<std::size_t>(v_count), 1);
    for (int v = 0; v < v_count; ++v) {
        for (std::size_t e1 = 0; e1 < graph.edges.size(); ++e1) {
            auto [a1, b1] = graph.edges[e1];
            if (a1 != v && b1 != v) continue;
            int o1 = a1 == v ? b1 : a1;
            for (std::size_t e2 = e1 + 1; e2 < graph.edges.size(); ++e2) {
                auto [a2, b2] = graph.edges[e2];
                if (a2 != v && b2 != v) continue;
                if (edge_label[e1].comparable(edge_label[e2])) continue;
                int o2 = a2 == v ? b2 : a2;
                double x1 = static_cast<double>(coords[static_cast<std::size_t>(o1)].x - coords[static_cast<std::size_t>(v)].x);
                double y1 = static_cast<double>(coords[static_cast<std::size_t>(o1)].y - coords[static_cast<std::size_t>(v)].y);
                double x2 = static_cast<double>(coords[static_cast<std::size_t>(o2)].x - coords[static_cast<std::size_t>(v)].x);
                double y2 = static_cast<double>(coords[static_cast<std::size_t>(o2)].y - coords[static_cast<std::size_t>(v)].y);
                double cross = std::abs(x1 * y2 - y1 * x2);
                if (cross == 0.0) continue;      // opposite rays separate on their own
                double sin_theta = cross / (std::hypot(x1, y1) * std::hypot(x2, y2));
                auto need = static_cast<std::int64_t>(std::ceil(3.0 / sin_theta));
                (*radius)[static_cast<std::size_t>(v)] =
                    std::clamp<std::int64_t>(need, (*radius)[static_cast<std::size_t>(v)], 512);
            }
        }
    }
    double s = 8.0;
    for (int u = 0; u < v_count; ++u)
        for (int v = u + 1; v < v_count; ++v) {
            double d = std::max(std::abs(static_cast<double>(coords[static_cast<std::size_t>(u)].x -
                                                             coords[static_cast<std::size_t>(v)].x)),
                                std::abs(static_cast<double>(coords[static_cast<std::size_t>(u)].y -
                                                             coords[static_cast<std::size_t>(v)].y)));
            if (d > 0)
                s = std::max(s, ((*radius)[static_cast<std::size_t>(u)] +
                                 (*radius)[static_cast<std::size_t>(v)] + 4.0) / d);
        }
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        auto [a, b] = graph.edges[e];
        for (int w = 0; w < v_count; ++w) {
            if (w == a || w == b) continue;
            double d = point_segment_distance(coords[static_cast<std::size_t>(w)],
                                              coords[static_cast<std::size_t>(a)],
                                              coords[static_cast<std::size_t>(b)]);
            if (d > 0) s = std::max(s, ((*radius)[static_cast<std::size_t>(w)] + 4.0) / d);
        }
    }
    for (std::size_t e1 = 0; e1 < graph.edges.size(); ++e1)
        for (std::size_t e2 = e1 + 1; e2 < graph.edges.size(); ++e2) {
            auto [a1, b1] = graph.edges[e1];
            auto [a2, b2] = graph.edges[e2];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
            double d = std::min(
                std::min(point_segment_distance(coords[static_cast<std::size_t>(a1)],
                                                coords[static_cast<std::size_t>(a2)],
                                                coords[static_cast<std::size_t>(b2)]),
                         point_segment_distance(coords[static_cast<std::size_t>(b1)],
                                                coords[static_cast<std::size_t>(a2)],
                                                coords[static_cast<std::size_t>(b2)])),
                std::min(point_segment_distance(coords[static_cast<std::size_t>(a2)],
                                                coords[static_cast<std::size_t>(a1)],
                                                coords[static_cast<std::size_t>(b1)]),
                         point_segment_distance(coords[static_cast<std::size_t>(b2)],
                                                coords[static_cast<std::size_t>(a1)],
                                                coords[static_cast<std::size_t>(b1)])));
            if (d > 0) s = std::max(s, 6.0 / d);
        }
    *scale = static_cast<std::int64_t>(std::ceil(s));
}

}  // namespace

GridRealization fatten_embedding(const Code& code, const AdmissibleGraph& graph,
                                 const std::vector<GridPoint>& coords) {
    if (!validate(graph, code).ok)
        throw InternalError("fatten_embedding: graph does not validate against the code");
    if (coords.size() != static_cast<std::size_t>(graph.vertex_count()))
        throw InternalError("fatten_embedding: coordinate count mismatch");
    if (!drawing_is_plane(graph.skeleton(), coords))
        throw InternalError("fatten_embedding: coordinates fail the crossing check");

    int v_count = graph.vertex_count();
    if (v_count == 0) {
        return GridRealization(2, {1, 1, 1}, code.neuron_count());
    }

    // connector label: the containment-smaller endpoint
    std::vector<Codeword> edge_label(graph.edges.size());
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        auto [a, b] = graph.edges[e];
        Codeword la = graph.labels[static_cast<std::size_t>(a)];
        Codeword lb = graph.labels[static_cast<std::size_t>(b)];
        edge_label[e] = la.strict_subset_of(lb) ? la : lb;
    }

    std::vector<std::int64_t> radius;
    std::int64_t scale = 8;
    plan_layout(graph, coords, edge_label, &radius, &scale);
    constexpr int kMaxAttempts = 24;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Cell> center(static_cast<std::size_t>(v_count));
        for (int v = 0; v < v_count; ++v)
            center[static_cast<std::size_t>(v)] = {coords[static_cast<std::size_t>(v)].x * scale,
                                                   coords[static_cast<std::size_t>(v)].y * scale};

        // blocks must stay pairwise separated by at least two empty cells
        bool cramped = false;
        for (int u = 0; u < v_count && !cramped; ++u)
            for (int v = u + 1; v < v_count && !cramped; ++v) {
                std::int64_t d = std::max(std::llabs(center[static_cast<std::size_t>(u)].x -
                                                     center[static_cast<std::size_t>(v)].x),
                                          std::llabs(center[static_cast<std::size_t>(u)].y -
                                                     center[static_cast<std::size_t>(v)].y));
                if (d < radius[static_cast<std::size_t>(u)] + radius[static_cast<std::size_t>(v)] + 3)
                    cramped = true;
            }
        if (cramped) {
            scale *= 2;
            continue;
        }

        std::int64_t rmax = *std::max_element(radius.begin(), radius.end());
        std::int64_t lo_x = center[0].x, hi_x = center[0].x, lo_y = center[0].y, hi_y = center[0].y;
        for (const Cell& c : center) {
            lo_x = std::min(lo_x, c.x);
            hi_x = std::max(hi_x, c.x);
            lo_y = std::min(lo_y, c.y);
            hi_y = std::max(hi_y, c.y);
        }
        Raster r;
        r.min_x = lo_x - rmax - 1;
        r.min_y = lo_y - rmax - 1;
        std::int64_t w = hi_x - r.min_x + rmax + 2, h = hi_y - r.min_y + rmax + 2;
        if (w * h > kMaxGridCells)
            throw GridBudgetError("2d raster would need " + std::to_string(w * h) + " cells");
        r.width = static_cast<int>(w);
        r.height = static_cast<int>(h);
        r.label.assign(static_cast<std::size_t>(w * h), Codeword::empty());
        r.owner.assign(static_cast<std::size_t>(w * h), -1);

        auto in_block = [&](Cell c, int v) {
            return std::llabs(c.x - center[static_cast<std::size_t>(v)].x) <= radius[static_cast<std::size_t>(v)] &&
                   std::llabs(c.y - center[static_cast<std::size_t>(v)].y) <= radius[static_cast<std::size_t>(v)];
        };

        for (int v = 0; v < v_count; ++v) {
            std::int64_t rad = radius[static_cast<std::size_t>(v)];
            for (std::int64_t dx = -rad; dx <= rad; ++dx)
                for (std::int64_t dy = -rad; dy <= rad; ++dy) {
                    Cell c{center[static_cast<std::size_t>(v)].x + dx,
                           center[static_cast<std::size_t>(v)].y + dy};
                    r.label[r.idx(c)] = graph.labels[static_cast<std::size_t>(v)];
                    r.owner[r.idx(c)] = kBlockOwnerBase + v;
                }
        }

        std::optional<Failure> failure;
        for (std::size_t e = 0; e < graph.edges.size() && !failure; ++e) {
            auto [a, b] = graph.edges[e];
            for (Cell c : supercover(center[static_cast<std::size_t>(a)],
                                     center[static_cast<std::size_t>(b)])) {
                if (in_block(c, a) || in_block(c, b)) continue;
                std::size_t i = r.idx(c);
                if (r.owner[i] == -1) {
                    r.label[i] = edge_label[e];
                    r.owner[i] = static_cast<int>(e);
                } else if (!(r.label[i] == edge_label[e])) {
                    failure = classify(graph, r.owner[i], static_cast<int>(e));
                    break;
                }
            }
        }

        if (!failure) {
            GridRealization grid(2, {r.width, r.height, 1}, code.neuron_count());
            for (int y = 0; y < r.height; ++y)
                for (int x = 0; x < r.width; ++x)
                    grid.set(x, y, 0, r.label[static_cast<std::size_t>(x) +
                                              static_cast<std::size_t>(r.width) * y]);
            auto adm = check_admissible(grid);
            if (adm.ok && all_fields_connected(grid) && extract_code(grid) == code)
                return grid;
            if (!adm.ok) {
                const auto& viol = adm.violations.front();
                failure = classify(graph, r.owner[static_cast<std::size_t>(viol.cell_a)],
                                   r.owner[static_cast<std::size_t>(viol.cell_b)]);
            } else {
                failure = Failure{Failure::Kind::Scale, -1};
            }
        }

        if (failure->kind == Failure::Kind::GrowVertex)
            radius[static_cast<std::size_t>(failure->vertex)] *= 2;
        else
            scale *= 2;
    }
    throw RasterizationError("fatten_embedding: retries exhausted without an admissible raster");
}

}  // namespace rfcode
