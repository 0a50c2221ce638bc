// extension.hpp — mixed extensions of base graphs, the star family
// S(t0, -p, t1..tq) in normalized multiset form, recognition, and
// parameter-level induced containment.
#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccentra/graph.hpp"

namespace eccentra {

// One signed entry per base vertex: t > 0 clique of size t, t < 0 coclique.
using ExtensionType = std::vector<int>;

inline Graph mixed_extension(const Graph& base, const ExtensionType& ty) {
    if (static_cast<int>(ty.size()) != base.n)
        throw std::invalid_argument("mixed_extension: type length != base order");
    int n = 0;
    for (int t : ty) {
        if (t == 0) throw std::invalid_argument("mixed_extension: zero entry");
        n += std::abs(t);
    }
    Graph g(n);
    std::vector<int> first(ty.size()), size(ty.size());
    int pos = 0;
    for (size_t i = 0; i < ty.size(); ++i) {
        first[i] = pos;
        size[i] = std::abs(ty[i]);
        pos += size[i];
    }
    for (size_t i = 0; i < ty.size(); ++i) {
        if (ty[i] > 0)
            for (int u = first[i]; u < first[i] + size[i]; ++u)
                for (int v = u + 1; v < first[i] + size[i]; ++v) g.add_edge(u, v);
        for (size_t j = i + 1; j < ty.size(); ++j)
            if (base.has_edge(static_cast<int>(i), static_cast<int>(j)))
                for (int u = first[i]; u < first[i] + size[i]; ++u)
                    for (int v = first[j]; v < first[j] + size[j]; ++v) g.add_edge(u, v);
    }
    return g;
}

// One clique part size with its multiplicity; parts kept strictly descending.
struct StarPart {
    int size = 0;   // t_i >= 2
    int count = 0;  // k_i >= 1
    bool operator==(const StarPart&) const = default;
};

// Normalized S(t0, -p, k1*t1, ..., kh*th):
//   t0 >= 1 center clique, p >= 0 singleton leaves, parts sizes strictly
//   descending, every listed size >= 2. Complete graphs are pinned to
//   (n-1, 1, {}) for n >= 2 and K1 to (1, 0, {}).
struct StarParams {
    int t0 = 1;
    int p = 0;
    std::vector<StarPart> parts;

    bool operator==(const StarParams&) const = default;

    int q() const {
        int s = 0;
        for (const auto& pt : parts) s += pt.count;
        return s;
    }
    int h() const { return static_cast<int>(parts.size()); }
    int order() const {
        int s = t0 + p;
        for (const auto& pt : parts) s += pt.size * pt.count;
        return s;
    }
    bool is_complete() const { return p + q() <= 1; }
    // largest clique: center plus one whole part, or center plus one leaf
    int max_clique() const {
        int best = t0;
        if (p >= 1) best = std::max(best, t0 + 1);
        if (!parts.empty()) best = std::max(best, t0 + parts.front().size);
        return best;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "S(" << t0;
        if (p > 0) os << ",-" << p;
        for (const auto& pt : parts) {
            os << "," << pt.size;
            if (pt.count > 1) os << "^" << pt.count;
        }
        os << ")";
        return os.str();
    }
};

// Folds size-1 parts and all coclique entries into the leaf pool, groups the
// rest, and pins complete graphs to their canonical split.
inline StarParams normalize(int t0, const std::vector<int>& raw) {
    if (t0 < 1) throw std::invalid_argument("normalize: center size must be >= 1");
    int p = 0;
    std::map<int, int, std::greater<int>> grouped;
    for (int t : raw) {
        if (t == 0) throw std::invalid_argument("normalize: zero entry");
        if (t < 0)
            p += -t;  // coclique leaves pool; multiple negatives merge
        else if (t == 1)
            ++p;
        else
            ++grouped[t];
    }
    StarParams sp;
    sp.t0 = t0;
    sp.p = p;
    for (auto [size, count] : grouped) sp.parts.push_back({size, count});
    if (sp.is_complete()) {
        int n = sp.order();
        if (n == 1) return {1, 0, {}};
        return {n - 1, 1, {}};
    }
    return sp;
}

inline StarParams normalize(const StarParams& sp) {
    std::vector<int> raw(static_cast<size_t>(sp.p), -1);
    for (const auto& pt : sp.parts)
        for (int i = 0; i < pt.count; ++i) raw.push_back(pt.size);
    return normalize(sp.t0, raw);
}

// Center clique joined to every part; parts pairwise non-adjacent.
// Vertex layout: center, then leaves, then parts descending.
inline Graph star_extension(const StarParams& sp) {
    int n = sp.order();
    Graph g(n);
    for (int u = 0; u < sp.t0; ++u)
        for (int v = u + 1; v < sp.t0; ++v) g.add_edge(u, v);
    for (int u = 0; u < sp.t0; ++u)
        for (int v = sp.t0; v < n; ++v) g.add_edge(u, v);
    int pos = sp.t0 + sp.p;
    for (const auto& pt : sp.parts)
        for (int k = 0; k < pt.count; ++k) {
            for (int u = pos; u < pos + pt.size; ++u)
                for (int v = u + 1; v < pos + pt.size; ++v) g.add_edge(u, v);
            pos += pt.size;
        }
    return g;
}

// Center := the full universal-vertex set (equals V0 exactly for
// non-complete star extensions); remainder must split into cliques.
inline std::optional<StarParams> recognize_star_extension(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("recognize: disconnected graph");
    if (g.n == 1) return StarParams{1, 0, {}};
    std::uint64_t universal = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v] == (g.full_mask() & ~(1ull << v))) universal |= 1ull << v;
    int t0 = __builtin_popcountll(universal);
    if (t0 == g.n) return StarParams{g.n - 1, 1, {}};  // complete
    if (t0 == 0) return std::nullopt;
    std::vector<int> rest;
    for (int v = 0; v < g.n; ++v)
        if (!((universal >> v) & 1ull)) rest.push_back(v);
    Graph h = induced_subgraph(g, rest);
    std::vector<int> sizes;
    for (std::uint64_t comp : component_masks(h)) {
        if (!mask_is_clique(h, comp)) return std::nullopt;
        sizes.push_back(__builtin_popcountll(comp));
    }
    return normalize(t0, sizes);
}

// True iff star_extension(pattern) embeds as an induced subgraph of
// star_extension(host). For non-complete patterns the pattern center must
// land in the host center and blobs match part-to-part; complete patterns
// reduce to a max-clique comparison.
inline bool param_contains(const StarParams& host_in, const StarParams& pattern_in) {
    StarParams host = normalize(host_in);
    StarParams pat = normalize(pattern_in);
    if (pat.order() > host.order()) return false;
    if (pat.is_complete()) return pat.order() <= host.max_clique();

    if (pat.t0 > host.t0) return false;
    // descending part lists; greedy pairwise fit is exact (sizes totally ordered)
    std::vector<int> hp, pp;
    for (const auto& x : host.parts)
        for (int i = 0; i < x.count; ++i) hp.push_back(x.size);
    for (const auto& x : pat.parts)
        for (int i = 0; i < x.count; ++i) pp.push_back(x.size);
    if (pp.size() > hp.size()) return false;
    for (size_t i = 0; i < pp.size(); ++i)
        if (pp[i] > hp[i]) return false;
    // leaves: host leaf pool plus one vertex from each unused host part
    int leaf_budget = host.p + static_cast<int>(hp.size() - pp.size());
    return pat.p <= leaf_budget;
}

// Parameter conditions (i)-(v) characterizing exactly one positive
// anti-adjacency eigenvalue; expects normalized params.
inline bool in_theorem1_family(const StarParams& sp) {
    int pq = sp.p + sp.q();
    switch (sp.t0) {
        case 1: return pq >= 1;
        case 2: return true;
        case 3: return pq <= 4;
        case 4: return pq <= 3;
        default: return pq <= 2;  // t0 >= 5
    }
}

// ---- text form ---------------------------------------------------------------

// Canonical form "S(t0,-p,t1^k1,...)"; also accepts the flat list notation
// "S(a,-b,c,d,...)" with repeated and size-1 entries.
inline StarParams parse_star_params(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 4 || (s[0] != 'S' && s[0] != 's') || s[1] != '(' || s.back() != ')')
        throw std::invalid_argument("star params: expected S(...)");
    std::string body = s.substr(2, s.size() - 3);
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else
            cur.push_back(ch);
    }
    tokens.push_back(cur);
    if (tokens.empty()) throw std::invalid_argument("star params: empty");
    auto parse_int = [](const std::string& t) {
        size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument("star params: bad integer '" + t + "'");
        return v;
    };
    int t0 = parse_int(tokens[0]);
    std::vector<int> raw;
    for (size_t i = 1; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        size_t caret = t.find('^');
        if (caret == std::string::npos) {
            int v = parse_int(t);
            if (v == 0) throw std::invalid_argument("star params: zero size");
            raw.push_back(v);
        } else {
            int sz = parse_int(t.substr(0, caret));
            int cnt = parse_int(t.substr(caret + 1));
            if (sz == 0 || cnt <= 0) throw std::invalid_argument("star params: bad exponent form");
            for (int k = 0; k < cnt; ++k) raw.push_back(sz);
        }
    }
    return normalize(t0, raw);
}

}  // namespace eccentra
