#include "rfcode/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rfcode {

std::string GraphViolation::describe() const {
    switch (kind) {
        case Kind::MissingCodeword:
            return "codeword " + brace_form(word) + " labels no vertex";
        case Kind::ForeignLabel:
            return "label " + brace_form(word) + " is not a codeword of the target code";
        case Kind::IncomparableEdge:
            return "edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                   " joins labels without strict containment";
        case Kind::NeuronDisconnected:
            return "neuron " + std::to_string(neuron) + " induces a disconnected subgraph";
    }
    return "unknown violation";
}

AdmissibleGraph canonical_graph(const Code& code) {
    auto conn = is_connected_code(code);
    if (!conn.connected) throw NotConnectedError(*conn.witness);
    AdmissibleGraph g;
    g.n = code.neuron_count();
    for (Codeword w : code.words())
        if (!w.is_empty()) g.labels.push_back(w);
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b)
            if (g.labels[static_cast<std::size_t>(a)].strict_subset_of(g.labels[static_cast<std::size_t>(b)]) ||
                g.labels[static_cast<std::size_t>(b)].strict_subset_of(g.labels[static_cast<std::size_t>(a)]))
                g.edges.emplace_back(a, b);
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ValidationResult validate(const AdmissibleGraph& graph, const Code& code) {
    for (Codeword w : code.words()) {
        if (w.is_empty()) continue;
        bool covered = std::any_of(graph.labels.begin(), graph.labels.end(),
                                   [w](Codeword l) { return l == w; });
        if (!covered)
            return {false, GraphViolation{GraphViolation::Kind::MissingCodeword, w, {}, 0}};
    }
    for (Codeword l : graph.labels)
        if (l.is_empty() || !code.contains(l))
            return {false, GraphViolation{GraphViolation::Kind::ForeignLabel, l, {}, 0}};
    for (auto [a, b] : graph.edges) {
        if (a < 0 || b < 0 || a >= graph.vertex_count() || b >= graph.vertex_count() || a == b)
            throw InternalError("graph edge endpoints out of range");
        Codeword la = graph.labels[static_cast<std::size_t>(a)];
        Codeword lb = graph.labels[static_cast<std::size_t>(b)];
        if (!(la.strict_subset_of(lb) || lb.strict_subset_of(la)))
            return {false, GraphViolation{GraphViolation::Kind::IncomparableEdge, la, {a, b}, 0}};
    }
    for (int i = 1; i <= graph.n; ++i) {
        std::vector<int> members;
        for (int v = 0; v < graph.vertex_count(); ++v)
            if (graph.labels[static_cast<std::size_t>(v)].contains(i)) members.push_back(v);
        if (members.size() <= 1) continue;
        std::vector<int> local(static_cast<std::size_t>(graph.vertex_count()), -1);
        for (std::size_t k = 0; k < members.size(); ++k)
            local[static_cast<std::size_t>(members[k])] = static_cast<int>(k);
        UnionFind uf(static_cast<int>(members.size()));
        for (auto [a, b] : graph.edges) {
            int la = local[static_cast<std::size_t>(a)], lb = local[static_cast<std::size_t>(b)];
            if (la != -1 && lb != -1) uf.unite(la, lb);
        }
        int root = uf.find(0);
        for (std::size_t k = 1; k < members.size(); ++k)
            if (uf.find(static_cast<int>(k)) != root)
                return {false, GraphViolation{GraphViolation::Kind::NeuronDisconnected, {}, {}, i}};
    }
    return {true, std::nullopt};
}

namespace {

bool planar_only(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    return is_planar_quick({vertex_count, edges});
}

// Search state for one multiplicity vector: the comparable-pair edge
// universe plus per-neuron membership, with excluded edges tracked by index.
struct VectorSearch {
    std::vector<Codeword> labels;
    std::vector<std::pair<int, int>> universe;
    std::vector<std::vector<int>> neuron_vertices;   // per neuron, vertex list
    std::vector<std::vector<int>> neuron_edges;      // per neuron, universe indices
    std::vector<std::vector<int>> local_id;          // [neuron][vertex] -> position in list
    std::vector<int> edge_index;                     // a * V + b -> universe index
    int n = 0;

    std::vector<char> excluded;
    std::vector<char> locked;                        // disjoint-branch commitments

    mutable std::vector<int> uf_parent;              // scratch
    mutable std::vector<char> mandatory;             // scratch, per node

    explicit VectorSearch(int n_, std::vector<Codeword> labels_) : labels(std::move(labels_)), n(n_) {
        int v = static_cast<int>(labels.size());
        edge_index.assign(static_cast<std::size_t>(v) * static_cast<std::size_t>(std::max(v, 1)), -1);
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (labels[static_cast<std::size_t>(a)].strict_subset_of(labels[static_cast<std::size_t>(b)]) ||
                    labels[static_cast<std::size_t>(b)].strict_subset_of(labels[static_cast<std::size_t>(a)])) {
                    edge_index[static_cast<std::size_t>(a) * static_cast<std::size_t>(v) + static_cast<std::size_t>(b)] =
                        static_cast<int>(universe.size());
                    universe.emplace_back(a, b);
                }
        neuron_vertices.resize(static_cast<std::size_t>(n));
        neuron_edges.resize(static_cast<std::size_t>(n));
        local_id.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(v), -1));
        for (int i = 1; i <= n; ++i)
            for (int a = 0; a < v; ++a)
                if (labels[static_cast<std::size_t>(a)].contains(i)) {
                    local_id[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a)] =
                        static_cast<int>(neuron_vertices[static_cast<std::size_t>(i - 1)].size());
                    neuron_vertices[static_cast<std::size_t>(i - 1)].push_back(a);
                }
        for (std::size_t e = 0; e < universe.size(); ++e) {
            auto [a, b] = universe[e];
            Codeword small = labels[static_cast<std::size_t>(a)].subset_of(labels[static_cast<std::size_t>(b)])
                                 ? labels[static_cast<std::size_t>(a)]
                                 : labels[static_cast<std::size_t>(b)];
            for (int i : small.neurons())
                neuron_edges[static_cast<std::size_t>(i - 1)].push_back(static_cast<int>(e));
        }
        excluded.assign(universe.size(), 0);
        locked.assign(universe.size(), 0);
        uf_parent.resize(static_cast<std::size_t>(v));
        mandatory.assign(universe.size(), 0);
    }

    int vertex_count() const { return static_cast<int>(labels.size()); }

    int find(int x) const {
        while (uf_parent[static_cast<std::size_t>(x)] != x)
            x = uf_parent[static_cast<std::size_t>(x)] =
                uf_parent[static_cast<std::size_t>(uf_parent[static_cast<std::size_t>(x)])];
        return x;
    }

    // neuron i stays connected if the extra exclusion is applied
    bool neuron_ok(int i, int extra_excluded) const {
        const auto& verts = neuron_vertices[static_cast<std::size_t>(i - 1)];
        int m = static_cast<int>(verts.size());
        if (m <= 1) return true;
        for (int k = 0; k < m; ++k) uf_parent[static_cast<std::size_t>(k)] = k;
        const auto& ids = local_id[static_cast<std::size_t>(i - 1)];
        for (int e : neuron_edges[static_cast<std::size_t>(i - 1)]) {
            if (excluded[static_cast<std::size_t>(e)] || e == extra_excluded) continue;
            auto [a, b] = universe[static_cast<std::size_t>(e)];
            uf_parent[static_cast<std::size_t>(find(ids[static_cast<std::size_t>(a)]))] =
                find(ids[static_cast<std::size_t>(b)]);
        }
        int root = find(0);
        for (int k = 1; k < m; ++k)
            if (find(k) != root) return false;
        return true;
    }

    bool all_neurons_ok() const {
        for (int i = 1; i <= n; ++i)
            if (!neuron_ok(i, -1)) return false;
        return true;
    }

    // removing edge e keeps validity iff every neuron internal to its
    // smaller label stays connected
    bool removable(int e) const {
        auto [a, b] = universe[static_cast<std::size_t>(e)];
        Codeword small = labels[static_cast<std::size_t>(a)].subset_of(labels[static_cast<std::size_t>(b)])
                             ? labels[static_cast<std::size_t>(a)]
                             : labels[static_cast<std::size_t>(b)];
        for (int i : small.neurons())
            if (!neuron_ok(i, e)) return false;
        return true;
    }

    SimpleGraph current() const {
        SimpleGraph g{vertex_count(), {}};
        for (std::size_t e = 0; e < universe.size(); ++e)
            if (!excluded[e]) g.edges.push_back(universe[e]);
        return g;
    }

    // Every valid subgraph below this node contains all mandatory edges and
    // keeps each neuron class connected, so contracting a class in the
    // mandatory subgraph yields a minor of every such subgraph. A non-planar
    // mandatory core or contraction refutes the whole subtree.
    bool minor_prune() const {
        std::vector<std::pair<int, int>> core;
        for (std::size_t e = 0; e < universe.size(); ++e) {
            mandatory[e] = !excluded[e] && !removable(static_cast<int>(e));
            if (mandatory[e]) core.push_back(universe[e]);
        }
        if (!planar_only(vertex_count(), core)) return true;
        int v = vertex_count();
        for (int i = 1; i <= n; ++i) {
            const auto& verts = neuron_vertices[static_cast<std::size_t>(i - 1)];
            if (verts.size() <= 1) continue;
            for (int k = 0; k < v; ++k) uf_parent[static_cast<std::size_t>(k)] = k;
            for (std::size_t k = 1; k < verts.size(); ++k)
                uf_parent[static_cast<std::size_t>(find(verts[k]))] = find(verts[0]);
            std::vector<std::pair<int, int>> contracted;
            for (auto [a, b] : core) {
                int ra = find(a), rb = find(b);
                if (ra != rb) contracted.emplace_back(std::min(ra, rb), std::max(ra, rb));
            }
            std::sort(contracted.begin(), contracted.end());
            contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());
            if (!planar_only(v, contracted)) return true;
        }
        return false;
    }
};

enum class InnerStatus { Found, NotFound, Budget };

// Systematic deletion search: the current graph is always valid; if it is
// planar we are done, otherwise every planar valid subgraph must drop at
// least one witness edge, so branching over the removable witness edges
// (with left-to-right locking to keep branches disjoint) is exhaustive.
InnerStatus inner_search(VectorSearch& vs, std::int64_t& nodes, std::int64_t budget,
                         std::optional<PlanarFound>* found, int neuron_count) {
    if (++nodes > budget) return InnerStatus::Budget;
    SimpleGraph g = vs.current();
    PlanarityResult pr = is_planar(g);
    if (const Embedding* emb = std::get_if<Embedding>(&pr)) {
        AdmissibleGraph out;
        out.n = neuron_count;
        out.labels = vs.labels;
        out.edges = g.edges;
        *found = PlanarFound{std::move(out), *emb};
        return InnerStatus::Found;
    }
    if (vs.minor_prune()) return InnerStatus::NotFound;
    const auto& witness = std::get<KuratowskiWitness>(pr);
    std::vector<int> branchable;
    for (auto [a, b] : witness.edges) {
        int e = vs.edge_index[static_cast<std::size_t>(std::min(a, b)) *
                                  static_cast<std::size_t>(vs.vertex_count()) +
                              static_cast<std::size_t>(std::max(a, b))];
        if (vs.locked[static_cast<std::size_t>(e)]) continue;
        if (vs.mandatory[static_cast<std::size_t>(e)]) continue;
        branchable.push_back(e);
    }
    std::sort(branchable.begin(), branchable.end());
    std::vector<int> locally_locked;
    InnerStatus result = InnerStatus::NotFound;
    for (int e : branchable) {
        vs.excluded[static_cast<std::size_t>(e)] = 1;
        InnerStatus st = inner_search(vs, nodes, budget, found, neuron_count);
        vs.excluded[static_cast<std::size_t>(e)] = 0;
        if (st != InnerStatus::NotFound) {
            result = st;
            break;
        }
        vs.locked[static_cast<std::size_t>(e)] = 1;
        locally_locked.push_back(e);
    }
    for (int e : locally_locked) vs.locked[static_cast<std::size_t>(e)] = 0;
    return result;
}

}  // namespace

PlanarSearchResult search_planar_admissible(const Code& code, const SearchOptions& opts) {
    auto conn = is_connected_code(code);
    if (!conn.connected) throw NotConnectedError(*conn.witness);
    if (opts.dup_bound < 1) throw InternalError("dup_bound must be >= 1");

    std::vector<Codeword> words;
    for (Codeword w : code.words())
        if (!w.is_empty()) words.push_back(w);
    std::size_t k = words.size();

    std::int64_t nodes = 0;
    std::vector<int> mult(k, 1);
    while (true) {
        std::vector<Codeword> labels;
        for (std::size_t wi = 0; wi < k; ++wi)
            for (int c = 0; c < mult[wi]; ++c) labels.push_back(words[wi]);

        VectorSearch vs(code.neuron_count(), std::move(labels));
        // the full comparable-edge graph is the best case for connectivity;
        // if it fails, no subgraph at this multiplicity can validate
        if (vs.all_neurons_ok()) {
            std::optional<PlanarFound> found;
            InnerStatus st = inner_search(vs, nodes, opts.budget, &found, code.neuron_count());
            if (st == InnerStatus::Found) return *found;
            if (st == InnerStatus::Budget) return SearchBudgetExceeded{nodes};
        } else {
            ++nodes;
        }

        // next multiplicity vector in lexicographic order
        std::size_t pos = k;
        while (pos > 0 && mult[pos - 1] == opts.dup_bound) mult[--pos] = 1;
        if (pos == 0) break;
        ++mult[pos - 1];
        if (nodes > opts.budget) return SearchBudgetExceeded{nodes};
    }
    return ExhaustedNotFound{nodes};
}

bool labeled_isomorphic(const AdmissibleGraph& a, const AdmissibleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edges.size() != b.edges.size()) return false;
    auto sorted_labels = [](const AdmissibleGraph& g) {
        auto l = g.labels;
        std::sort(l.begin(), l.end(), word_less);
        return l;
    };
    if (sorted_labels(a) != sorted_labels(b)) return false;

    int v = a.vertex_count();
    std::vector<std::vector<char>> adj_a(static_cast<std::size_t>(v),
                                         std::vector<char>(static_cast<std::size_t>(v), 0));
    auto adj_b = adj_a;
    for (auto [x, y] : a.edges)
        adj_a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
            adj_a[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
    for (auto [x, y] : b.edges)
        adj_b[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
            adj_b[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;

    std::vector<int> map_ab(static_cast<std::size_t>(v), -1);
    std::vector<char> used(static_cast<std::size_t>(v), 0);
    auto backtrack = [&](auto&& self, int va) -> bool {
        if (va == v) return true;
        for (int vb = 0; vb < v; ++vb) {
            if (used[static_cast<std::size_t>(vb)]) continue;
            if (!(a.labels[static_cast<std::size_t>(va)] == b.labels[static_cast<std::size_t>(vb)]))
                continue;
            bool ok = true;
            for (int prev = 0; prev < va && ok; ++prev)
                if (adj_a[static_cast<std::size_t>(va)][static_cast<std::size_t>(prev)] !=
                    adj_b[static_cast<std::size_t>(vb)][static_cast<std::size_t>(map_ab[static_cast<std::size_t>(prev)])])
                    ok = false;
            if (!ok) continue;
            map_ab[static_cast<std::size_t>(va)] = vb;
            used[static_cast<std::size_t>(vb)] = 1;
            if (self(self, va + 1)) return true;
            used[static_cast<std::size_t>(vb)] = 0;
            map_ab[static_cast<std::size_t>(va)] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

}  // namespace rfcode
