#include "invg/prime.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_map>

#include "invg/errors.hpp"
#include "invg/inversion_graph.hpp"

namespace invg {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

std::uint64_t mask_of(const std::vector<int>& s) {
    std::uint64_t m = 0;
    for (int v : s) m |= bit(v);
    return m;
}

std::vector<int> list_of(std::uint64_t m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

bool is_module_mask(const Graph& g, std::uint64_t m) {
    for (int x = 1; x <= g.n(); ++x) {
        if (m & bit(x)) continue;
        const std::uint64_t seen = g.row(x) & m;
        if (seen != 0 && seen != m) return false;
    }
    return true;
}

// Smallest module containing the vertices of m.
std::uint64_t module_closure(const Graph& g, std::uint64_t m) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 1; x <= g.n(); ++x) {
            if (m & bit(x)) continue;
            const std::uint64_t seen = g.row(x) & m;
            if (seen != 0 && seen != m) {
                m |= bit(x);
                grew = true;
            }
        }
    }
    return m;
}

}  // namespace

bool is_module(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (v < 1 || v > g.n()) throw DomainError("module vertex out of range");
    return is_module_mask(g, mask_of(s));
}

std::optional<std::vector<int>> find_nontrivial_module(const Graph& g) {
    const int n = g.n();
    std::optional<std::vector<int>> best;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const std::uint64_t m = module_closure(g, bit(a) | bit(b));
            if (std::popcount(m) >= n) continue;
            auto s = list_of(m);
            if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best)) best = std::move(s);
        }
    return best;
}

bool is_prime(const Graph& g) { return !find_nontrivial_module(g).has_value(); }

namespace {

bool extends_chain(const Graph& g, std::uint64_t prev, int last, int x) {
    const std::uint64_t r = g.row(x);
    if (g.adjacent(x, last)) return (r & prev) == 0;
    return (r & prev) == prev;
}

}  // namespace

bool is_chain(const Graph& g, const Chain& c) {
    std::uint64_t seen = 0;
    for (int v : c) {
        if (v < 1 || v > g.n() || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    std::uint64_t prev = 0;
    for (std::size_t i = 2; i < c.size(); ++i) {
        prev |= bit(c[i - 2]);
        if (!extends_chain(g, prev, c[i - 1], c[i])) return false;
    }
    return true;
}

std::optional<Chain> find_chain(const Graph& g, int u, int v, int w) {
    const int n = g.n();
    for (int x : {u, v, w})
        if (x < 1 || x > n) throw DomainError("chain vertex out of range");
    if (u == v || u == w || v == w) throw DomainError("chain endpoints must be distinct");
    caps::require("find_chain", n, 12, 16);
    struct State {
        std::uint64_t mask;
        int last;
        int parent;
    };
    std::vector<State> states{{bit(u) | bit(v), v, -1}};
    std::unordered_map<std::uint64_t, int> seen{{((bit(u) | bit(v)) << 6) | static_cast<std::uint64_t>(v), 0}};
    for (std::size_t head = 0; head < states.size(); ++head) {
        const State s = states[head];
        const std::uint64_t prev = s.mask & ~bit(s.last);
        for (int x = 1; x <= n; ++x) {
            if (s.mask & bit(x)) continue;
            if (!extends_chain(g, prev, s.last, x)) continue;
            if (x == w) {
                Chain c{w};
                for (int i = static_cast<int>(head); i >= 0; i = states[i].parent) c.push_back(states[i].last);
                c.push_back(u);
                std::reverse(c.begin(), c.end());
                return c;
            }
            const std::uint64_t key = ((s.mask | bit(x)) << 6) | static_cast<std::uint64_t>(x);
            if (seen.count(key)) continue;
            seen.emplace(key, static_cast<int>(states.size()));
            states.push_back({s.mask | bit(x), x, static_cast<int>(head)});
        }
    }
    return std::nullopt;
}

int EdgeClassPartition::class_of_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) throw DomainError("not an edge");
    return class_of[static_cast<std::size_t>(it - edges.begin())];
}

EdgeClassPartition edge_classes(const Graph& g) {
    EdgeClassPartition p;
    p.edges = g.edges();
    const int n = g.n(), m = static_cast<int>(p.edges.size());
    std::vector<int> id(static_cast<std::size_t>(n + 1) * (n + 1), -1);
    for (int e = 0; e < m; ++e) {
        auto [a, b] = p.edges[e];
        id[a * (n + 1) + b] = id[b * (n + 1) + a] = e;
    }
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int b = 1; b <= n; ++b)
        for (int a = 1; a <= n; ++a) {
            if (!g.adjacent(a, b)) continue;
            for (int c = a + 1; c <= n; ++c)
                if (c != b && g.adjacent(b, c) && !g.adjacent(a, c))
                    parent[find(id[a * (n + 1) + b])] = find(id[b * (n + 1) + c]);
        }
    std::vector<int> label(m, -1);
    p.class_of.resize(m);
    for (int e = 0; e < m; ++e) {
        const int r = find(e);
        if (label[r] < 0) label[r] = p.count++;
        p.class_of[e] = label[r];
    }
    return p;
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

namespace {

// Sets a -> b and every arc it forces; false on contradiction.
bool force_arc(const Graph& g, std::vector<std::uint64_t>& out, int a0, int b0) {
    std::vector<std::pair<int, int>> todo{{a0, b0}};
    while (!todo.empty()) {
        auto [a, b] = todo.back();
        todo.pop_back();
        if (out[b - 1] & bit(a)) return false;
        if (out[a - 1] & bit(b)) continue;
        out[a - 1] |= bit(b);
        for (std::uint64_t r = g.row(b) & ~bit(a); r; r &= r - 1) {
            const int c = std::countr_zero(r) + 1;
            if (!g.adjacent(a, c)) todo.emplace_back(c, b);
            else if (out[b - 1] & bit(c)) todo.emplace_back(a, c);
        }
        for (std::uint64_t r = g.row(a) & ~bit(b); r; r &= r - 1) {
            const int c = std::countr_zero(r) + 1;
            if (!g.adjacent(b, c)) todo.emplace_back(a, c);
            else if (out[c - 1] & bit(a)) todo.emplace_back(c, b);
        }
    }
    return true;
}

struct OrientationSearch {
    const Graph& g;
    std::vector<std::pair<int, int>> edges;
    std::size_t cap;
    bool stop_at_first;
    OrientationSet result;

    bool run(std::size_t from, const std::vector<std::uint64_t>& out) {
        while (from < edges.size()) {
            auto [u, v] = edges[from];
            if (!((out[u - 1] & bit(v)) || (out[v - 1] & bit(u)))) break;
            ++from;
        }
        if (from == edges.size()) {
            ++result.count;
            if (result.listed.size() < cap) result.listed.push_back({g.n(), out});
            return stop_at_first;
        }
        auto [u, v] = edges[from];
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            auto next = out;
            if (force_arc(g, next, a, b) && run(from + 1, next)) return true;
        }
        return false;
    }
};

}  // namespace

OrientationSet transitive_orientations(const Graph& g, std::size_t cap) {
    caps::require("transitive_orientations", g.n(), 8, 10);
    OrientationSearch s{g, g.edges(), cap, false, {}};
    s.run(0, std::vector<std::uint64_t>(g.n(), 0));
    return s.result;
}

std::uint64_t transitive_orientation_count(const Graph& g) { return transitive_orientations(g, 0).count; }

std::optional<Orientation> find_transitive_orientation(const Graph& g) {
    OrientationSearch s{g, g.edges(), 1, true, {}};
    s.run(0, std::vector<std::uint64_t>(g.n(), 0));
    if (s.result.listed.empty()) return std::nullopt;
    return s.result.listed.front();
}

bool is_transitive_orientation(const Graph& g, const Orientation& o) {
    const int n = g.n();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const bool a = o.has_arc(u, v), b = o.has_arc(v, u);
            if (g.adjacent(u, v) != (a || b) || (a && b)) return false;
        }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (o.has_arc(a, b))
                for (int c = 1; c <= n; ++c)
                    if (o.has_arc(b, c) && !o.has_arc(a, c)) return false;
    return true;
}

namespace {

// Index = in-degree in the complement + out-degree in G, value = in-degree
// in the complement + in-degree in G (each plus one).
std::optional<Permutation> permutation_from_pair(const Orientation& t, const Orientation& tc) {
    const int n = t.n;
    std::vector<int> vals(n, 0);
    for (int v = 1; v <= n; ++v) {
        int in_c = 0, out_g = 0, in_g = 0;
        for (int u = 1; u <= n; ++u) {
            if (tc.has_arc(u, v)) ++in_c;
            if (t.has_arc(v, u)) ++out_g;
            if (t.has_arc(u, v)) ++in_g;
        }
        const int idx = in_c + out_g + 1;
        if (vals[idx - 1]) return std::nullopt;
        vals[idx - 1] = in_c + in_g + 1;
    }
    try {
        return Permutation(std::move(vals));
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<Permutation> recover_permutations_from_orientations(const Permutation& p) {
    caps::require("recover_permutations_from_orientations", p.size(), 8, 10);
    if (!is_simple(p)) throw DomainError("permutation is not simple");
    const Graph g = inversion_graph(p);
    const auto t = transitive_orientations(g);
    const auto tc = transitive_orientations(complement(g));
    std::vector<Permutation> out;
    for (const auto& a : t.listed)
        for (const auto& b : tc.listed) {
            auto s = permutation_from_pair(a, b);
            if (!s) throw DomainError("orientation pair does not yield a permutation");
            out.push_back(*s);
        }
    return out;
}

std::vector<Permutation> permutations_from_graph_orientations(const Graph& g) {
    constexpr std::size_t kMaxPairs = 1'000'000;
    const auto t = transitive_orientations(g, kMaxPairs);
    const auto tc = transitive_orientations(complement(g), kMaxPairs);
    if (t.count > kMaxPairs || tc.count > kMaxPairs || t.count * tc.count > kMaxPairs)
        throw SizeCapError("too many orientation pairs");
    std::set<Permutation> out;
    for (const auto& a : t.listed)
        for (const auto& b : tc.listed) {
            auto s = permutation_from_pair(a, b);
            if (!s) throw DomainError("orientation pair does not yield a permutation");
            out.insert(*s);
        }
    return {out.begin(), out.end()};
}

SymmetryReport automorphism_symmetry_check(const Permutation& p) {
    caps::require("automorphism_symmetry_check", p.size(), 8, 10);
    if (!is_simple(p)) throw DomainError("permutation is not simple");
    SymmetryReport r;
    r.automorphisms = automorphism_count(inversion_graph(p));
    const Permutation rc = symmetry(p, Symmetry::reverse_complement);
    std::set<Permutation> imgs{p, inverse(p), rc, inverse(rc)};
    r.images.assign(imgs.begin(), imgs.end());
    r.consistent = (r.automorphisms == 1 || r.automorphisms == 2 || r.automorphisms == 4) &&
                   r.automorphisms * r.images.size() == 4;
    return r;
}

}  // namespace invg
