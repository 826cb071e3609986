// Test-only oracles, kept independent of the library's decision procedures:
// a literal chain-condition check, a no-pruning atom-word enumerator, and a
// pattern-based planarity oracle for graphs on at most 6 vertices.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rfcode/code.hpp"
#include "rfcode/planarity.hpp"

namespace rfcode::testing {

inline Code make_code(const std::string& text) { return parse_code(text).code; }

inline Codeword w(const std::string& digits) {
    Codeword out;
    for (char c : digits) out = out.with(c - '0');
    return out;
}

// Enumerates sequences of distinct codewords from sigma to tau, every entry
// containing the neuron and consecutive entries comparable.
inline bool chain_exists(const std::vector<Codeword>& words, int neuron, Codeword sigma,
                         Codeword tau, std::vector<Codeword>& path) {
    Codeword cur = path.back();
    if (cur == tau) return true;
    for (Codeword next : words) {
        if (!next.contains(neuron)) continue;
        if (!next.comparable(cur)) continue;
        if (std::find(path.begin(), path.end(), next) != path.end()) continue;
        path.push_back(next);
        if (chain_exists(words, neuron, sigma, tau, path)) return true;
        path.pop_back();
    }
    return false;
}

// The chain condition checked by literal sequence enumeration.
inline bool oracle_connected(const Code& code) {
    const auto& words = code.words();
    for (int i = 1; i <= code.neuron_count(); ++i)
        for (Codeword sigma : words)
            for (Codeword tau : words) {
                if (!sigma.contains(i) || !tau.contains(i)) continue;
                std::vector<Codeword> path{sigma};
                if (!chain_exists(words, i, sigma, tau, path)) return false;
            }
    return true;
}

// Full check of one candidate word; written directly from the conditions,
// sharing nothing with the search or verify_word.
inline bool oracle_word_ok(const Code& code, const std::vector<int>& idx) {
    const auto& words = code.words();
    for (std::size_t p = 0; p + 1 < idx.size(); ++p)
        if (!words[static_cast<std::size_t>(idx[p])].comparable(
                words[static_cast<std::size_t>(idx[p + 1])]))
            return false;
    std::uint64_t seen = 0;
    for (int k : idx) seen |= std::uint64_t{1} << k;
    for (std::size_t k = 1; k < words.size(); ++k)
        if (!(seen & (std::uint64_t{1} << k))) return false;
    for (int i = 1; i <= code.neuron_count(); ++i) {
        int first = -1, last = -1;
        for (std::size_t p = 0; p < idx.size(); ++p)
            if (words[static_cast<std::size_t>(idx[p])].contains(i)) {
                if (first == -1) first = static_cast<int>(p);
                last = static_cast<int>(p);
            }
        for (int p = first; first != -1 && p <= last; ++p)
            if (!words[static_cast<std::size_t>(idx[p])].contains(i)) return false;
    }
    return true;
}

// Odometer over every sequence of codewords up to length 2n+1: no pruning,
// each candidate checked in full (early exits inside the check only).
inline bool oracle_word_exists(const Code& code) {
    int base = static_cast<int>(code.size());
    int max_len = 2 * code.neuron_count() + 1;
    if (code.size() == 1) return true;           // the empty-only code
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> idx(static_cast<std::size_t>(len), 0);
        while (true) {
            if (oracle_word_ok(code, idx)) return true;
            int p = len - 1;
            while (p >= 0 && idx[static_cast<std::size_t>(p)] == base - 1)
                idx[static_cast<std::size_t>(p--)] = 0;
            if (p < 0) break;
            ++idx[static_cast<std::size_t>(p)];
        }
    }
    return false;
}

// Planarity on <= 6 vertices: non-planar iff the graph contains K5, K3,3,
// or K5 with one edge subdivided (the only Kuratowski subdivisions that fit
// in 6 vertices).
inline bool oracle_planar6(const SimpleGraph& g) {
    int v = g.vertex_count;
    bool adj[6][6] = {};
    for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = true;

    std::vector<int> verts(static_cast<std::size_t>(v));
    for (int k = 0; k < v; ++k) verts[static_cast<std::size_t>(k)] = k;

    // K5 subgraph
    if (v >= 5) {
        std::vector<char> pick(static_cast<std::size_t>(v), 0);
        std::fill(pick.end() - 5, pick.end(), 1);
        std::sort(pick.begin(), pick.end());
        do {
            std::vector<int> s;
            for (int k = 0; k < v; ++k)
                if (pick[static_cast<std::size_t>(k)]) s.push_back(k);
            bool all = true;
            for (std::size_t a = 0; a < 5 && all; ++a)
                for (std::size_t b = a + 1; b < 5 && all; ++b)
                    all = adj[s[a]][s[b]];
            if (all) return false;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    if (v == 6) {
        // K3,3 subgraph: all bipartitions into 3+3
        for (int mask = 0; mask < 64; ++mask) {
            if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
            std::vector<int> a, b;
            for (int k = 0; k < 6; ++k) (mask >> k & 1 ? a : b).push_back(k);
            bool all = true;
            for (int x : a)
                for (int y : b) all = all && adj[x][y];
            if (all) return false;
        }
        // K5 with one edge subdivided through vertex s
        for (int s = 0; s < 6; ++s) {
            std::vector<int> branch;
            for (int k = 0; k < 6; ++k)
                if (k != s) branch.push_back(k);
            for (std::size_t ui = 0; ui < 5; ++ui)
                for (std::size_t vi = ui + 1; vi < 5; ++vi) {
                    if (!adj[s][branch[ui]] || !adj[s][branch[vi]]) continue;
                    bool all = true;
                    for (std::size_t a = 0; a < 5 && all; ++a)
                        for (std::size_t b = a + 1; b < 5 && all; ++b) {
                            if (a == ui && b == vi) continue;  // the subdivided pair
                            all = adj[branch[a]][branch[b]];
                        }
                    if (all) return false;
                }
        }
    }
    return true;
}

// Every code on n neurons containing the empty word, canonical order.
inline std::vector<Code> all_codes(int n) {
    std::vector<Codeword> universe;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits)
        universe.push_back({bits});
    std::sort(universe.begin(), universe.end(), word_less);
    std::vector<Code> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
        std::vector<Codeword> sel;
        for (std::size_t k = 0; k < universe.size(); ++k)
            if (mask & (std::uint64_t{1} << k)) sel.push_back(universe[k]);
        out.emplace_back(n, std::move(sel));
    }
    return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return perm;
}

}  // namespace rfcode::testing
