// Brute-force reference implementations used only by the tests. Each one is
// written from the definitions, independently of the library algorithms,
// and is only meant for tiny inputs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "invg/graph.hpp"
#include "invg/permutation.hpp"

namespace oracle {

using invg::Graph;
using invg::Permutation;

// Adjacency as a flat bitmask over pairs, i<j, n <= 8.
using Labelled = std::uint32_t;

inline int pair_bit(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    // Pairs enumerated (1,2),(1,3),...,(1,n),(2,3),...
    int bit = 0;
    for (int a = 1; a < i; ++a) bit += n - a;
    return bit + (j - i - 1);
}

inline Labelled pack(const Graph& g) {
    Labelled m = 0;
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j)
            if (g.adjacent(i, j)) m |= Labelled{1} << pair_bit(g.n(), i, j);
    return m;
}

inline bool adj(int n, Labelled m, int i, int j) { return (m >> pair_bit(n, i, j)) & 1u; }

inline Graph inversion_graph(const Permutation& p) {
    Graph g(p.size());
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p(i) > p(j)) g.add_edge(p(i), p(j));
    return g;
}

inline int inversions(const Permutation& p) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j) c += p(i) > p(j);
    return c;
}

// Every bijection, applied as vertex relabelling.
template <class F>
void for_each_relabelling(int n, F&& f) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> one(n + 1, 0);
        for (int i = 0; i < n; ++i) one[i + 1] = perm[i];
        f(one);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline bool maps_onto(const Graph& g, const Graph& h, const std::vector<int>& m) {
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j)
            if (g.adjacent(i, j) != h.adjacent(m[i], m[j])) return false;
    return true;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    bool found = false;
    for_each_relabelling(g.n(), [&](const std::vector<int>& m) {
        if (!found && maps_onto(g, h, m)) found = true;
    });
    return found;
}

inline std::uint64_t automorphisms(const Graph& g) {
    std::uint64_t c = 0;
    for_each_relabelling(g.n(), [&](const std::vector<int>& m) { c += maps_onto(g, g, m); });
    return c;
}

// Smallest labelled bitmask over all relabellings: a canonical key.
inline Labelled canonical_key(const Graph& g) {
    Labelled best = ~Labelled{0};
    for_each_relabelling(g.n(), [&](const std::vector<int>& m) {
        Labelled key = 0;
        for (int i = 1; i <= g.n(); ++i)
            for (int j = i + 1; j <= g.n(); ++j)
                if (g.adjacent(i, j)) key |= Labelled{1} << pair_bit(g.n(), m[i], m[j]);
        best = std::min(best, key);
    });
    return best;
}

// One labelled representative per isomorphism class on n <= 6 vertices.
inline std::vector<Graph> all_graphs_up_to_iso(int n) {
    const int pairs = n * (n - 1) / 2;
    std::set<Labelled> seen;
    std::vector<Graph> out;
    for (Labelled m = 0; m < (Labelled{1} << pairs); ++m) {
        Graph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (adj(n, m, i, j)) g.add_edge(i, j);
        if (seen.insert(canonical_key(g)).second) out.push_back(g);
    }
    return out;
}

inline std::vector<int> members(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (mask >> (v - 1) & 1u) out.push_back(v);
    return out;
}

inline bool is_module(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.n() + 1, 0);
    for (int v : s) in[v] = 1;
    for (int x = 1; x <= g.n(); ++x) {
        if (in[x]) continue;
        for (int a : s)
            for (int b : s)
                if (g.adjacent(x, a) != g.adjacent(x, b)) return false;
    }
    return true;
}

inline bool is_prime(const Graph& g) {
    const int n = g.n();
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        const int size = __builtin_popcount(m);
        if (size < 2 || size == n) continue;
        if (oracle::is_module(g, members(m, n))) return false;
    }
    return true;
}

// Counts transitive orientations by trying all 2^m arc choices.
inline std::uint64_t transitive_orientations(const Graph& g) {
    const auto e = g.edges();
    const int n = g.n();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
        std::vector<std::vector<char>> arc(n + 1, std::vector<char>(n + 1, 0));
        for (std::size_t k = 0; k < e.size(); ++k) {
            auto [a, b] = e[k];
            if (mask >> k & 1u) std::swap(a, b);
            arc[a][b] = 1;
        }
        bool ok = true;
        for (int a = 1; a <= n && ok; ++a)
            for (int b = 1; b <= n && ok; ++b)
                for (int c = 1; c <= n && ok; ++c)
                    if (arc[a][b] && arc[b][c] && !arc[a][c]) ok = false;
        count += ok;
    }
    return count;
}

inline int chromatic(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(n + 1, 0);
        // odometer over k^n colourings
        while (true) {
            bool ok = true;
            for (auto [a, b] : g.edges())
                if (col[a] == col[b]) ok = false;
            if (ok) return k;
            int i = 1;
            while (i <= n && ++col[i] == k) col[i++] = 0;
            if (i > n) break;
        }
    }
    return n;
}

inline int clique(const Graph& g) {
    int best = 0;
    for (std::uint32_t m = 1; m < (1u << g.n()); ++m) {
        auto s = members(m, g.n());
        bool ok = true;
        for (std::size_t a = 0; a < s.size() && ok; ++a)
            for (std::size_t b = a + 1; b < s.size() && ok; ++b) ok = g.adjacent(s[a], s[b]);
        if (ok) best = std::max<int>(best, s.size());
    }
    return best;
}

// Least k such that some ordering of the vertices and some word over k
// letters is consistent: all pairs of positions with the same ordered letter
// pair agree on adjacency. n <= 5.
inline int lettericity(const Graph& g, int k_max) {
    const int n = g.n();
    for (int k = 1; k <= k_max; ++k) {
        bool found = false;
        for_each_relabelling(n, [&](const std::vector<int>& order) {
            if (found) return;
            std::vector<int> w(n + 1, 0);
            while (!found) {
                std::map<std::pair<int, int>, bool> dec;
                bool ok = true;
                for (int i = 1; i <= n && ok; ++i)
                    for (int j = i + 1; j <= n && ok; ++j) {
                        const bool e = g.adjacent(order[i], order[j]);
                        auto [it, fresh] = dec.emplace(std::pair{w[i], w[j]}, e);
                        if (!fresh && it->second != e) ok = false;
                    }
                if (ok) found = true;
                int i = 1;
                while (i <= n && ++w[i] == k) w[i++] = 0;
                if (i > n) break;
            }
        });
        if (found) return k;
    }
    return -1;
}

// Reflection distance to the edgeless graph on labelled states, BFS over
// every legal toggle set. n <= 6.
inline int reflection_distance(const Graph& start, bool allow_nonedge) {
    const int n = start.n();
    std::map<Labelled, int> dist;
    std::queue<Labelled> q;
    dist[pack(start)] = 0;
    q.push(pack(start));
    while (!q.empty()) {
        const Labelled m = q.front();
        q.pop();
        if (m == 0) return dist[m];
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                const bool edge = adj(n, m, u, v);
                if (!edge && !allow_nonedge) continue;
                std::vector<int> eligible;
                for (int w = 1; w <= n; ++w) {
                    if (w == u || w == v) continue;
                    const bool a = adj(n, m, u, w), b = adj(n, m, v, w);
                    if (edge ? (a || b) : !(a && b)) eligible.push_back(w);
                }
                for (std::uint32_t s = 0; s < (1u << eligible.size()); ++s) {
                    Labelled next = m ^ (Labelled{1} << pair_bit(n, u, v));
                    for (std::size_t t = 0; t < eligible.size(); ++t)
                        if (s >> t & 1u) {
                            next ^= Labelled{1} << pair_bit(n, u, eligible[t]);
                            next ^= Labelled{1} << pair_bit(n, v, eligible[t]);
                        }
                    if (dist.emplace(next, dist[m] + 1).second) q.push(next);
                }
            }
    }
    return -1;
}

inline Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng() & 1u) g.add_edge(i, j);
    return g;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

inline bool contains(const Permutation& p, const Permutation& pat) {
    const int n = p.size(), k = pat.size();
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 1);
    if (k > n) return false;
    while (true) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b)
                ok = (p(idx[a]) < p(idx[b])) == (pat(a + 1) < pat(b + 1));
        if (ok) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i + 1) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace oracle
