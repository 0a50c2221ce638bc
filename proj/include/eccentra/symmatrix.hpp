// symmatrix.hpp — small dense symmetric integer matrices; anti-adjacency
// (eccentricity) and adjacency matrix construction.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eccentra/graph.hpp"

namespace eccentra {

struct SymMatrix {
    int n = 0;
    std::vector<std::int64_t> a;  // row-major n*n, symmetric

    SymMatrix() = default;
    explicit SymMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

    std::int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    void set_sym(int i, int j, std::int64_t v) {
        at(i, j) = v;
        at(j, i) = v;
    }

    bool operator==(const SymMatrix& o) const { return n == o.n && a == o.a; }

    SymMatrix principal_submatrix(const std::vector<int>& vs) const {
        SymMatrix m(static_cast<int>(vs.size()));
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = 0; j < vs.size(); ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) = at(vs[i], vs[j]);
        return m;
    }

    std::int64_t trace() const {
        std::int64_t t = 0;
        for (int i = 0; i < n; ++i) t += at(i, i);
        return t;
    }
};

// Entry (u,v) = d(u,v) when the distance attains min of the two endpoint
// eccentricities, 0 otherwise. Requires a connected graph.
inline SymMatrix anti_adjacency(const Graph& g) {
    DistanceMatrix dm = distances(g);
    EccProfile ep = ecc_profile(dm);
    if (!ep.connected) throw std::invalid_argument("anti_adjacency: disconnected graph");
    SymMatrix m(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int d = dm.at(u, v);
            if (d == std::min(ep.ecc[u], ep.ecc[v])) m.set_sym(u, v, d);
        }
    return m;
}

inline SymMatrix adjacency(const Graph& g) {
    SymMatrix m(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) m.set_sym(u, v, 1);
    return m;
}

// Lemma-2.2 hypotheses: every vertex of the induced subgraph keeps its
// eccentricity and every pair keeps its distance. When they hold, the
// anti-adjacency matrix of H is entrywise the principal submatrix of the
// anti-adjacency matrix of G (cross-checked here).
inline bool submatrix_conditions(const Graph& g, const std::vector<int>& vs) {
    Graph h = induced_subgraph(g, vs);
    if (!is_connected(h)) throw std::invalid_argument("submatrix_conditions: H disconnected");
    DistanceMatrix dg = distances(g);
    DistanceMatrix dh = distances(h);
    EccProfile eg = ecc_profile(dg);
    EccProfile eh = ecc_profile(dh);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (eh.ecc[i] != eg.ecc[vs[i]]) return false;
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (dh.at(static_cast<int>(i), static_cast<int>(j)) != dg.at(vs[i], vs[j]))
                return false;
    }
    SymMatrix sub = anti_adjacency(g).principal_submatrix(vs);
    if (!(anti_adjacency(h) == sub))
        throw std::logic_error("submatrix_conditions: Lemma 2.2 entrywise check failed");
    return true;
}

}  // namespace eccentra
