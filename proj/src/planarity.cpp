#include "rfcode/planarity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <boost/property_map/property_map.hpp>

#include "rfcode/code.hpp"

namespace rfcode {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;
using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
using EmbeddingMap =
    boost::iterator_property_map<EmbeddingStorage::iterator,
                                 boost::property_map<BoostGraph, boost::vertex_index_t>::type>;

BoostGraph to_boost(const SimpleGraph& g) {
    BoostGraph bg(static_cast<std::size_t>(g.vertex_count));
    for (auto [a, b] : g.edges) boost::add_edge(a, b, bg);
    int idx = 0;
    auto em = boost::get(boost::edge_index, bg);
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(em, *ei, idx++);
    return bg;
}

void reindex_edges(BoostGraph& bg) {
    int idx = 0;
    auto em = boost::get(boost::edge_index, bg);
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) boost::put(em, *ei, idx++);
}

std::vector<std::vector<int>> adjacency(const SimpleGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
    for (auto [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

int component_count(const SimpleGraph& g, std::vector<int>* out = nullptr) {
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count), -1);
    auto adj = adjacency(g);
    int count = 0;
    for (int seed = 0; seed < g.vertex_count; ++seed) {
        if (comp[static_cast<std::size_t>(seed)] != -1) continue;
        std::queue<int> q;
        q.push(seed);
        comp[static_cast<std::size_t>(seed)] = count;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = count;
                    q.push(w);
                }
        }
        ++count;
    }
    if (out) *out = std::move(comp);
    return count;
}

// Faces of one component, traced through the rotation system: the successor
// of directed edge (u,v) is (v,w) with w following u in rotation[v].
bool trace_faces(const SimpleGraph& g, const Embedding& emb,
                 std::vector<int>* faces_per_component) {
    std::vector<int> comp;
    int ncomp = component_count(g, &comp);
    std::vector<std::map<int, int>> pos(static_cast<std::size_t>(g.vertex_count));
    for (int v = 0; v < g.vertex_count; ++v) {
        const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < rot.size(); ++k) {
            if (!pos[static_cast<std::size_t>(v)].emplace(rot[k], static_cast<int>(k)).second)
                return false;                    // repeated neighbor in rotation
        }
    }
    std::map<std::pair<int, int>, char> visited;
    for (auto [a, b] : g.edges) {
        visited[{a, b}] = 0;
        visited[{b, a}] = 0;
    }
    faces_per_component->assign(static_cast<std::size_t>(ncomp), 0);
    for (auto& [start, seen] : visited) {
        if (seen) continue;
        auto cur = start;
        while (!visited[cur]) {
            visited[cur] = 1;
            auto [u, v] = cur;
            const auto& rot = emb.rotation[static_cast<std::size_t>(v)];
            auto it = pos[static_cast<std::size_t>(v)].find(u);
            if (it == pos[static_cast<std::size_t>(v)].end()) return false;
            int w = rot[static_cast<std::size_t>((it->second + 1) % static_cast<int>(rot.size()))];
            cur = {v, w};
        }
        if (cur != start) return false;          // walked into a previously closed face
        ++(*faces_per_component)[static_cast<std::size_t>(comp[static_cast<std::size_t>(start.first)])];
    }
    // a component with no edges still has its single face
    std::vector<char> has_edge(static_cast<std::size_t>(ncomp), 0);
    for (auto [a, b] : g.edges) has_edge[static_cast<std::size_t>(comp[static_cast<std::size_t>(a)])] = 1;
    for (int c = 0; c < ncomp; ++c)
        if (!has_edge[static_cast<std::size_t>(c)]) (*faces_per_component)[static_cast<std::size_t>(c)] = 1;
    return true;
}

bool rotation_matches_graph(const SimpleGraph& g, const Embedding& emb) {
    if (emb.rotation.size() != static_cast<std::size_t>(g.vertex_count)) return false;
    auto adj = adjacency(g);
    for (int v = 0; v < g.vertex_count; ++v) {
        auto rot = emb.rotation[static_cast<std::size_t>(v)];
        auto nb = adj[static_cast<std::size_t>(v)];
        std::sort(rot.begin(), rot.end());
        std::sort(nb.begin(), nb.end());
        if (rot != nb) return false;
    }
    return true;
}

// Suppresses degree-2 vertices of the witness subgraph; returns the
// resulting simple graph or nullopt when the edge set is not a subdivision.
std::optional<SimpleGraph> suppress_witness(const SimpleGraph& g,
                                            const std::vector<std::pair<int, int>>& edges) {
    std::map<std::pair<int, int>, char> in_graph;
    for (auto [a, b] : g.edges) in_graph[{std::min(a, b), std::max(a, b)}] = 1;
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : edges) {
        if (a == b) return std::nullopt;
        if (!in_graph.count({std::min(a, b), std::max(a, b)})) return std::nullopt;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& [v, nb] : adj) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return std::nullopt;
        if (nb.size() == 1) return std::nullopt;  // dangling path, not a subdivision
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [v, nb] : adj) {
            if (nb.size() != 2) continue;
            int a = nb[0], b = nb[1];
            if (a == b) return std::nullopt;
            auto& na = adj[a];
            auto& nbb = adj[b];
            if (std::find(na.begin(), na.end(), b) != na.end())
                return std::nullopt;             // suppression would create a parallel edge
            std::erase(na, v);
            std::erase(nbb, v);
            na.push_back(b);
            nbb.push_back(a);
            adj.erase(v);
            changed = true;
            break;
        }
    }
    std::map<int, int> remap;
    SimpleGraph out;
    for (auto& [v, nb] : adj) remap[v] = out.vertex_count++;
    for (auto& [v, nb] : adj)
        for (int w : nb)
            if (remap[v] < remap[w]) out.edges.emplace_back(remap[v], remap[w]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool is_k5(const SimpleGraph& g) {
    return g.vertex_count == 5 && g.edges.size() == 10;
}

// Drops tree-like appendages the extractor sometimes leaves on the witness.
std::vector<std::pair<int, int>> peel_low_degree(std::vector<std::pair<int, int>> edges) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<int, int> deg;
        for (auto [a, b] : edges) {
            ++deg[a];
            ++deg[b];
        }
        std::vector<std::pair<int, int>> kept;
        for (auto [a, b] : edges) {
            if (deg[a] <= 1 || deg[b] <= 1)
                changed = true;
            else
                kept.emplace_back(a, b);
        }
        edges = std::move(kept);
    }
    return edges;
}

bool planar_quick(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    BoostGraph bg(static_cast<std::size_t>(vertex_count));
    for (auto [a, b] : edges) boost::add_edge(a, b, bg);
    return boyer_myrvold_planarity_test(bg);
}

// Edge-deletion minimalization: a non-planar edge set in which every edge
// is critical is precisely a Kuratowski subdivision.
std::vector<std::pair<int, int>> minimalize_witness(int vertex_count,
                                                    std::vector<std::pair<int, int>> edges) {
    for (std::size_t i = 0; i < edges.size();) {
        auto probe = edges;
        probe.erase(probe.begin() + static_cast<std::ptrdiff_t>(i));
        if (!planar_quick(vertex_count, probe))
            edges = std::move(probe);
        else
            ++i;
    }
    return edges;
}

bool is_k33(const SimpleGraph& g) {
    if (g.vertex_count != 6 || g.edges.size() != 9) return false;
    auto adj = adjacency(g);
    for (const auto& nb : adj)
        if (nb.size() != 3) return false;
    // 3-regular on 6 vertices: bipartite <=> K3,3
    std::vector<int> color(6, -1);
    std::queue<int> q;
    q.push(0);
    color[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (color[static_cast<std::size_t>(w)] == -1) {
                color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                q.push(w);
            } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

PlanarityResult is_planar(const SimpleGraph& g) {
    BoostGraph bg = to_boost(g);
    EmbeddingStorage storage(static_cast<std::size_t>(g.vertex_count));
    EmbeddingMap epm(storage.begin(), boost::get(boost::vertex_index, bg));
    std::vector<BoostEdge> kur;
    bool planar = boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = epm,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));
    if (planar) {
        Embedding emb;
        emb.rotation.resize(static_cast<std::size_t>(g.vertex_count));
        for (int v = 0; v < g.vertex_count; ++v)
            for (BoostEdge e : storage[static_cast<std::size_t>(v)]) {
                int s = static_cast<int>(boost::source(e, bg));
                int t = static_cast<int>(boost::target(e, bg));
                emb.rotation[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
            }
        std::vector<int> faces;
        if (!trace_faces(g, emb, &faces))
            throw InternalError("planarity: embedding face tracing failed");
        int total = std::accumulate(faces.begin(), faces.end(), 0);
        int ncomp = static_cast<int>(faces.size());
        emb.face_count = total - std::max(0, ncomp - 1);
        if (!verify_embedding(g, emb))
            throw InternalError("planarity: embedding failed Euler verification");
        return emb;
    }
    KuratowskiWitness w;
    for (BoostEdge e : kur) {
        int s = static_cast<int>(boost::source(e, bg));
        int t = static_cast<int>(boost::target(e, bg));
        w.edges.emplace_back(std::min(s, t), std::max(s, t));
    }
    std::sort(w.edges.begin(), w.edges.end());
    w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());
    w.edges = peel_low_degree(std::move(w.edges));
    auto core = suppress_witness(g, w.edges);
    if (!core || !(is_k5(*core) || is_k33(*core))) {
        w.edges = minimalize_witness(g.vertex_count, std::move(w.edges));
        core = suppress_witness(g, w.edges);
    }
    if (!core) throw InternalError("planarity: witness is not a subdivision");
    if (is_k5(*core))
        w.kind = KuratowskiWitness::Kind::K5;
    else if (is_k33(*core))
        w.kind = KuratowskiWitness::Kind::K33;
    else
        throw InternalError("planarity: witness core is neither K5 nor K3,3");
    return w;
}

bool is_planar_quick(const SimpleGraph& g) {
    return planar_quick(g.vertex_count, g.edges);
}

bool verify_embedding(const SimpleGraph& g, const Embedding& emb) {
    if (!rotation_matches_graph(g, emb)) return false;
    std::vector<int> faces;
    if (!trace_faces(g, emb, &faces)) return false;
    std::vector<int> comp;
    int ncomp = component_count(g, &comp);
    std::vector<int> vc(static_cast<std::size_t>(ncomp), 0), ec(static_cast<std::size_t>(ncomp), 0);
    for (int v = 0; v < g.vertex_count; ++v) ++vc[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    for (auto [a, b] : g.edges) ++ec[static_cast<std::size_t>(comp[static_cast<std::size_t>(a)])];
    for (int c = 0; c < ncomp; ++c)
        if (vc[static_cast<std::size_t>(c)] - ec[static_cast<std::size_t>(c)] + faces[static_cast<std::size_t>(c)] != 2)
            return false;
    int total = std::accumulate(faces.begin(), faces.end(), 0);
    return emb.face_count == total - std::max(0, ncomp - 1);
}

bool verify_kuratowski(const SimpleGraph& g, const KuratowskiWitness& w) {
    auto core = suppress_witness(g, w.edges);
    if (!core) return false;
    if (w.kind == KuratowskiWitness::Kind::K5) return is_k5(*core);
    return is_k33(*core);
}

namespace {

using Int = std::int64_t;

Int cross(GridPoint o, GridPoint a, GridPoint b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(GridPoint p, GridPoint a, GridPoint b) {
    return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_touch(GridPoint p1, GridPoint q1, GridPoint p2, GridPoint q2) {
    Int d1 = cross(p2, q2, p1);
    Int d2 = cross(p2, q2, q1);
    Int d3 = cross(p1, q1, p2);
    Int d4 = cross(p1, q1, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    return (d1 == 0 && on_segment(p1, p2, q2)) || (d2 == 0 && on_segment(q1, p2, q2)) ||
           (d3 == 0 && on_segment(p2, p1, q1)) || (d4 == 0 && on_segment(q2, p1, q1));
}

}  // namespace

bool drawing_is_plane(const SimpleGraph& g, const std::vector<GridPoint>& coords) {
    if (coords.size() != static_cast<std::size_t>(g.vertex_count)) return false;
    auto pt = [&](int v) { return coords[static_cast<std::size_t>(v)]; };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [a1, b1] = g.edges[i];
        if (pt(a1) == pt(b1)) return false;      // degenerate edge
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
            auto [a2, b2] = g.edges[j];
            int shared = -1;
            if (a1 == a2 || a1 == b2) shared = a1;
            if (b1 == a2 || b1 == b2) shared = b1;
            if (shared != -1) {
                // edges meeting at a vertex may not overlap collinearly
                GridPoint p = pt(shared);
                GridPoint u = (a1 == shared) ? pt(b1) : pt(a1);
                GridPoint v = (a2 == shared) ? pt(b2) : pt(a2);
                if (cross(p, u, v) == 0 && (u.x - p.x) * (v.x - p.x) + (u.y - p.y) * (v.y - p.y) > 0)
                    return false;
                continue;
            }
            if (segments_touch(pt(a1), pt(b1), pt(a2), pt(b2))) return false;
        }
    }
    // vertices may not sit on non-incident edges
    for (auto [a, b] : g.edges)
        for (int v = 0; v < g.vertex_count; ++v)
            if (v != a && v != b && on_segment(pt(v), pt(a), pt(b))) return false;
    return true;
}

namespace {

struct DrawCoord {
    std::size_t x = 0, y = 0;
};

// Chrobak-Payne drawing of one connected component (vertices relabeled
// 0..k-1): connect, biconnect, triangulate, then place on the grid.
std::vector<GridPoint> draw_connected(const SimpleGraph& comp) {
    std::vector<GridPoint> out(static_cast<std::size_t>(comp.vertex_count));
    if (comp.vertex_count == 1) return out;
    if (comp.vertex_count == 2) {
        out[1] = {1, 0};
        return out;
    }
    BoostGraph bg = to_boost(comp);
    EmbeddingStorage storage(static_cast<std::size_t>(boost::num_vertices(bg)));
    auto embed = [&]() {
        storage.assign(boost::num_vertices(bg), {});
        EmbeddingMap epm(storage.begin(), boost::get(boost::vertex_index, bg));
        if (!boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                          boost::boyer_myrvold_params::embedding = epm))
            throw InternalError("planar_coordinates: graph is not planar");
        return epm;
    };
    auto simplify = [&]() {
        std::vector<std::pair<int, int>> uniq;
        for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) {
            int s = static_cast<int>(boost::source(*ei, bg));
            int t = static_cast<int>(boost::target(*ei, bg));
            if (s != t) uniq.emplace_back(std::min(s, t), std::max(s, t));
        }
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        BoostGraph clean(boost::num_vertices(bg));
        for (auto [a, b] : uniq) boost::add_edge(a, b, clean);
        bg = std::move(clean);
        reindex_edges(bg);
    };

    auto epm = embed();
    boost::make_biconnected_planar(bg, epm);
    simplify();
    epm = embed();
    boost::make_maximal_planar(bg, epm);
    simplify();
    epm = embed();

    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> ordering;
    boost::planar_canonical_ordering(bg, epm, std::back_inserter(ordering));
    std::vector<DrawCoord> coords(boost::num_vertices(bg));
    boost::chrobak_payne_straight_line_drawing(
        bg, epm, ordering.begin(), ordering.end(),
        boost::make_iterator_property_map(coords.begin(), boost::get(boost::vertex_index, bg)));
    for (int v = 0; v < comp.vertex_count; ++v)
        out[static_cast<std::size_t>(v)] = {static_cast<Int>(coords[static_cast<std::size_t>(v)].x),
                                            static_cast<Int>(coords[static_cast<std::size_t>(v)].y)};
    return out;
}

}  // namespace

Triangulation triangulate(const SimpleGraph& g) {
    if (g.vertex_count < 3) throw InternalError("triangulate: need at least 3 vertices");
    BoostGraph bg = to_boost(g);
    EmbeddingStorage storage(static_cast<std::size_t>(boost::num_vertices(bg)));
    auto embed = [&]() {
        storage.assign(boost::num_vertices(bg), {});
        EmbeddingMap epm(storage.begin(), boost::get(boost::vertex_index, bg));
        if (!boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                          boost::boyer_myrvold_params::embedding = epm))
            throw InternalError("triangulate: graph is not planar");
        return epm;
    };
    auto simplify = [&]() {
        std::vector<std::pair<int, int>> uniq;
        for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) {
            int s = static_cast<int>(boost::source(*ei, bg));
            int t = static_cast<int>(boost::target(*ei, bg));
            if (s != t) uniq.emplace_back(std::min(s, t), std::max(s, t));
        }
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        BoostGraph clean(boost::num_vertices(bg));
        for (auto [a, b] : uniq) boost::add_edge(a, b, clean);
        bg = std::move(clean);
        reindex_edges(bg);
    };
    boost::make_connected(bg);
    reindex_edges(bg);
    auto epm = embed();
    boost::make_biconnected_planar(bg, epm);
    simplify();
    epm = embed();
    boost::make_maximal_planar(bg, epm);
    simplify();
    epm = embed();

    Triangulation out;
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei) {
        int s = static_cast<int>(boost::source(*ei, bg));
        int t = static_cast<int>(boost::target(*ei, bg));
        out.edges.emplace_back(std::min(s, t), std::max(s, t));
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.rotation.resize(static_cast<std::size_t>(g.vertex_count));
    for (int v = 0; v < g.vertex_count; ++v)
        for (BoostEdge e : storage[static_cast<std::size_t>(v)]) {
            int s = static_cast<int>(boost::source(e, bg));
            int t = static_cast<int>(boost::target(e, bg));
            out.rotation[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
        }
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> ordering;
    boost::planar_canonical_ordering(bg, epm, std::back_inserter(ordering));
    for (auto v : ordering) out.order.push_back(static_cast<int>(v));
    return out;
}

std::vector<GridPoint> planar_coordinates(const SimpleGraph& g, const Embedding& emb) {
    if (!rotation_matches_graph(g, emb))
        throw InternalError("planar_coordinates: malformed rotation system");
    std::vector<int> comp;
    int ncomp = component_count(g, &comp);

    std::vector<GridPoint> out(static_cast<std::size_t>(g.vertex_count));
    Int x_offset = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.vertex_count; ++v)
            if (comp[static_cast<std::size_t>(v)] == c) verts.push_back(v);
        std::vector<int> local(static_cast<std::size_t>(g.vertex_count), -1);
        for (std::size_t k = 0; k < verts.size(); ++k)
            local[static_cast<std::size_t>(verts[k])] = static_cast<int>(k);
        SimpleGraph sub{static_cast<int>(verts.size()), {}};
        for (auto [a, b] : g.edges)
            if (comp[static_cast<std::size_t>(a)] == c)
                sub.edges.emplace_back(local[static_cast<std::size_t>(a)],
                                       local[static_cast<std::size_t>(b)]);
        auto pts = draw_connected(sub);
        Int width = 0;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            out[static_cast<std::size_t>(verts[k])] = {pts[k].x + x_offset, pts[k].y};
            width = std::max(width, pts[k].x);
        }
        x_offset += width + 2;
    }
    if (!drawing_is_plane(g, out))
        throw InternalError("planar_coordinates: drawing failed the crossing check");
    return out;
}

}  // namespace rfcode
