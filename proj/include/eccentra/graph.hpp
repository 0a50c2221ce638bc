// graph.hpp — undirected simple graphs on labeled vertices 0..n-1 with
// adjacency as packed bit rows (n <= 64), BFS metrics and small-pattern
// containment.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eccentra {

struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // adj[v] bit u set iff uv is an edge

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(static_cast<size_t>(n_), 0) {
        if (n_ < 1 || n_ > 64) throw std::invalid_argument("graph order must be in 1..64");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
    static Graph from_bit_rows(std::vector<std::uint64_t> rows) {
        Graph g(static_cast<int>(rows.size()));
        g.adj = std::move(rows);
        for (int v = 0; v < g.n; ++v) {
            if (g.adj[v] & (1ull << v)) throw std::invalid_argument("self-loop in bit rows");
            for (int u = v + 1; u < g.n; ++u)
                if (g.has_edge(u, v) != g.has_edge(v, u))
                    throw std::invalid_argument("asymmetric bit rows");
        }
        return g;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
        adj[u] |= 1ull << v;
        adj[v] |= 1ull << u;
    }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1ull; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    std::uint64_t full_mask() const { return (n == 64) ? ~0ull : ((1ull << n) - 1); }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }

    Graph complement() const {
        Graph g(n);
        for (int v = 0; v < n; ++v) g.adj[v] = ~adj[v] & full_mask() & ~(1ull << v);
        return g;
    }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
};

// ---- named constructions ----------------------------------------------------

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}
inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}
inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}
// K_{1,leaves}: vertex 0 is the center.
inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}
inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    Graph g(n);
    int a = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        int b = a + parts[i];
        for (int u = a; u < b; ++u)
            for (int v = b; v < n; ++v) g.add_edge(u, v);
        a = b;
    }
    return g;
}
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n + b.n);
    for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = b.adj[v] << a.n;
    return g;
}
inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.n; ++u)
        for (int v = a.n; v < g.n; ++v) g.add_edge(u, v);
    return g;
}

// ---- metrics ------------------------------------------------------------------

// Shortest-path distances; unreachable pairs carry the named sentinel, never
// a raw magic value at call sites.
struct DistanceMatrix {
    static constexpr int unreachable = std::numeric_limits<int>::max();
    int n = 0;
    std::vector<int> d;  // row-major n*n

    int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
    bool reachable(int u, int v) const { return at(u, v) != unreachable; }
};

inline DistanceMatrix distances(const Graph& g) {
    DistanceMatrix dm;
    dm.n = g.n;
    dm.d.assign(static_cast<size_t>(g.n) * g.n, DistanceMatrix::unreachable);
    for (int s = 0; s < g.n; ++s) {
        // BFS over bitmasks: frontier expands a whole level per step
        std::uint64_t seen = 1ull << s, frontier = 1ull << s;
        int level = 0;
        dm.d[static_cast<size_t>(s) * g.n + s] = 0;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= g.adj[v];
            }
            next &= ~seen;
            ++level;
            std::uint64_t w = next;
            while (w) {
                int v = __builtin_ctzll(w);
                w &= w - 1;
                dm.d[static_cast<size_t>(s) * g.n + v] = level;
            }
            seen |= next;
            frontier = next;
        }
    }
    return dm;
}

struct EccProfile {
    static constexpr int infinite = DistanceMatrix::unreachable;
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;
    bool connected = true;
};

inline EccProfile ecc_profile(const DistanceMatrix& dm) {
    EccProfile p;
    p.ecc.assign(static_cast<size_t>(dm.n), 0);
    for (int u = 0; u < dm.n; ++u) {
        int e = 0;
        for (int v = 0; v < dm.n; ++v) {
            if (!dm.reachable(u, v)) {
                e = EccProfile::infinite;
                p.connected = false;
                break;
            }
            e = std::max(e, dm.at(u, v));
        }
        p.ecc[u] = e;
    }
    if (p.connected) {
        p.diameter = 0;
        p.radius = std::numeric_limits<int>::max();
        for (int e : p.ecc) {
            p.diameter = std::max(p.diameter, e);
            p.radius = std::min(p.radius, e);
        }
    } else {
        p.diameter = EccProfile::infinite;
        p.radius = EccProfile::infinite;
    }
    return p;
}

inline bool is_connected(const Graph& g) {
    std::uint64_t seen = 1ull, frontier = 1ull;
    while (frontier) {
        std::uint64_t next = 0, f = frontier;
        while (f) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= g.adj[v];
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == g.full_mask();
}

// ---- induced subgraphs ---------------------------------------------------------

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) throw std::invalid_argument("empty vertex subset");
    for (int v : vs)
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    Graph h(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

// Connected components as vertex masks.
inline std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t left = g.full_mask();
    while (left) {
        int s = __builtin_ctzll(left);
        std::uint64_t seen = 1ull << s, frontier = seen;
        while (frontier) {
            std::uint64_t next = 0, f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= g.adj[v];
            }
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        comps.push_back(seen);
        left &= ~seen;
    }
    return comps;
}

inline bool mask_is_clique(const Graph& g, std::uint64_t mask) {
    std::uint64_t m = mask;
    while (m) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        if ((g.adj[v] & mask) != (mask & ~(1ull << v))) return false;
    }
    return true;
}

// ---- induced pattern containment ------------------------------------------------

namespace detail {

// Backtracking over pattern vertices in descending-degree order, pruning by
// degree compatibility. Looks for an *induced* embedding.
struct InducedSearch {
    const Graph& g;
    const Graph& pat;
    std::vector<int> order;    // pattern vertices, by descending degree
    std::vector<int> img;      // order index -> g vertex
    std::uint64_t used = 0;

    InducedSearch(const Graph& g_, const Graph& p_) : g(g_), pat(p_) {
        order.resize(static_cast<size_t>(pat.n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
        img.assign(static_cast<size_t>(pat.n), -1);
    }

    bool extend(size_t k) {
        if (k == order.size()) return true;
        int pv = order[k];
        for (int gv = 0; gv < g.n; ++gv) {
            if ((used >> gv) & 1ull) continue;
            if (g.degree(gv) < pat.degree(pv)) continue;
            bool ok = true;
            for (size_t j = 0; j < k && ok; ++j)
                if (pat.has_edge(pv, order[j]) != g.has_edge(gv, img[j])) ok = false;
            if (!ok) continue;
            img[k] = gv;
            used |= 1ull << gv;
            if (extend(k + 1)) return true;
            used &= ~(1ull << gv);
        }
        return false;
    }
};

}  // namespace detail

inline bool contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.n > g.n) throw std::invalid_argument("pattern larger than host");
    detail::InducedSearch s(g, pattern);
    return s.extend(0);
}

// ---- canonical form (n <= 10) ---------------------------------------------------

namespace detail {

// Iterated neighborhood-color refinement; returns per-vertex color ids.
inline std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(g.n));
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s;
            std::uint64_t m = g.adj[v];
            while (m) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                s.push_back(color[u]);
            }
            std::sort(s.begin(), s.end());
            s.push_back(color[v]);
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<size_t>(g.n));
        int c = 0;
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

inline std::vector<std::uint8_t> upper_bits(const Graph& g, const std::vector<int>& perm) {
    // perm[i] = original vertex placed at position i
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<size_t>(g.n) * (g.n - 1) / 2);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            bits.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
    return bits;
}

}  // namespace detail

// Canonical byte string: minimal upper-triangle bit string over all vertex
// orders consistent with the color refinement (colors sorted ascending).
inline std::string canonical_key(const Graph& g) {
    if (g.n > 10) throw std::invalid_argument("canonical_key supports n <= 10");
    std::vector<int> color = detail::refine_colors(g);
    std::vector<int> verts(static_cast<size_t>(g.n));
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        return color[a] != color[b] ? color[a] < color[b] : a < b;
    });
    // permute within color cells only
    std::vector<std::uint8_t> best;
    std::vector<int> perm;
    std::vector<char> used(static_cast<size_t>(g.n), 0);

    // order of positions: cells in ascending color
    std::vector<int> cell_of_pos(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) cell_of_pos[i] = color[verts[i]];

    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == g.n) {
            auto bits = detail::upper_bits(g, perm);
            if (best.empty() || bits < best) best = std::move(bits);
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (used[v] || color[v] != cell_of_pos[pos]) continue;
            used[v] = 1;
            perm.push_back(v);
            self(self, pos + 1);
            perm.pop_back();
            used[v] = 0;
        }
    };
    rec(rec, 0);

    std::string key;
    key.push_back(static_cast<char>(g.n));
    for (int c : cell_of_pos) key.push_back(static_cast<char>(c));
    for (auto b : best) key.push_back(static_cast<char>('0' + b));
    return key;
}

}  // namespace eccentra
