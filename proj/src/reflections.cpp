#include "invg/reflections.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <tuple>

#include "invg/errors.hpp"
#include "invg/inversion_graph.hpp"

namespace invg {

std::string to_string(ReflectionKind k) { return k == ReflectionKind::edge ? "edge" : "nonedge"; }

Reflection make_reflection(int u, int v, std::vector<int> X, ReflectionKind kind) {
    if (std::find(X.begin(), X.end(), u) == X.end()) X.push_back(u);
    if (std::find(X.begin(), X.end(), v) == X.end()) X.push_back(v);
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    return {u, v, std::move(X), kind};
}

namespace {

using Mask = std::uint64_t;
Mask bit(int v) { return Mask{1} << (v - 1); }

Mask closed_nbhd(const Graph& g, int v) { return g.row(v) | bit(v); }

std::vector<int> members(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

Reflection from_mask(int u, int v, Mask X, ReflectionKind kind) {
    return make_reflection(u, v, members(X | bit(u) | bit(v)), kind);
}

}  // namespace

bool is_legal(const Graph& g, const Reflection& t) {
    const int n = g.n();
    auto in_range = [n](int x) { return x >= 1 && x <= n; };
    if (!in_range(t.u) || !in_range(t.v) || t.u == t.v) return false;
    bool has_u = false, has_v = false;
    for (int w : t.X) {
        if (!in_range(w)) return false;
        has_u = has_u || w == t.u;
        has_v = has_v || w == t.v;
    }
    if (!has_u || !has_v) return false;
    const bool edge = g.adjacent(t.u, t.v);
    if (edge != (t.kind == ReflectionKind::edge)) return false;
    for (int w : t.X) {
        if (w == t.u || w == t.v) continue;
        const int seen = g.adjacent(w, t.u) + g.adjacent(w, t.v);
        if (edge ? seen == 0 : seen == 2) return false;
    }
    return true;
}

Graph apply_reflection(const Graph& g, const Reflection& t) {
    if (!is_legal(g, t)) throw DomainError("illegal " + to_string(t.kind) + " reflection on {" + std::to_string(t.u) +
                                           "," + std::to_string(t.v) + "}");
    Graph h = g;
    for (int w : t.X) {
        if (w == t.u || w == t.v) continue;
        h.toggle_edge(t.u, w);
        h.toggle_edge(t.v, w);
    }
    h.toggle_edge(t.u, t.v);
    return h;
}

Graph replay(const Graph& g, const std::vector<Reflection>& seq) {
    Graph h = g;
    for (const auto& t : seq) h = apply_reflection(h, t);
    return h;
}

std::vector<Reflection> legal_reflections(const Graph& g, ReflectionKind kind) {
    const int n = g.n();
    caps::require("legal_reflections", n, 8, 10);
    std::vector<Reflection> out;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (g.adjacent(u, v) != (kind == ReflectionKind::edge)) continue;
            Mask eligible = 0;
            for (int w = 1; w <= n; ++w) {
                if (w == u || w == v) continue;
                const int seen = g.adjacent(w, u) + g.adjacent(w, v);
                if (kind == ReflectionKind::edge ? seen > 0 : seen < 2) eligible |= bit(w);
            }
            const auto el = members(eligible);
            for (Mask s = 0; s < (Mask{1} << el.size()); ++s) {
                Mask X = 0;
                for (std::size_t b = 0; b < el.size(); ++b)
                    if ((s >> b) & 1u) X |= bit(el[b]);
                out.push_back(from_mask(u, v, X, kind));
            }
        }
    return out;
}

Reflection reduction_to_reflection(const Permutation& p, int i, int j) {
    const int n = p.size();
    if (i < 1 || j > n || i >= j || p(i) < p(j)) throw DomainError("(i, j) is not an inversion");
    std::vector<int> X{p(i), p(j)};
    for (int m = i + 1; m < j; ++m) X.push_back(p(m));
    return make_reflection(p(i), p(j), X, ReflectionKind::edge);
}

std::set<Permutation> bruhat_neighbors(const Permutation& p, BruhatOrder which, BruhatDirection dir) {
    const int n = p.size();
    caps::require("bruhat_neighbors", n, 7, 9);
    std::set<Permutation> out;
    auto v = p.values();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (which == BruhatOrder::weak && j != i + 1) continue;
            const bool down = v[i] > v[j];
            if (down != (dir == BruhatDirection::down)) continue;
            std::swap(v[i], v[j]);
            out.insert(Permutation(v));
            std::swap(v[i], v[j]);
        }
    return out;
}

int bruhat_distance_to_identity(const Permutation& p) {
    const Permutation e = Permutation::identity(p.size());
    std::map<Permutation, int> dist{{p, 0}};
    std::deque<Permutation> queue{p};
    while (!queue.empty()) {
        const Permutation q = queue.front();
        queue.pop_front();
        if (q == e) return dist[q];
        for (const auto& r : bruhat_neighbors(q, BruhatOrder::strong, BruhatDirection::down))
            if (dist.emplace(r, dist[q] + 1).second) queue.push_back(r);
    }
    throw DomainError("identity unreachable");  // unreachable: down arcs end at e
}

ReflectionPath bfs_to_edgeless(const Graph& g, bool allow_nonedge) {
    const int n = g.n();
    caps::require("bfs_to_edgeless", n, 7, 8);
    if (g.edge_count() == 0) return {};
    struct Node {
        CanonicalForm parent;
        Reflection move;
        Graph labelled;  // the representative reached by the stored path
        int dist = 0;
    };
    const CanonicalForm start = canonical_form(g);
    const CanonicalForm target = canonical_form(empty_graph(n));
    std::map<CanonicalForm, Node> seen;
    seen.emplace(start, Node{start, {}, g, 0});
    std::deque<CanonicalForm> queue{start};
    while (!queue.empty()) {
        const CanonicalForm f = queue.front();
        queue.pop_front();
        const Graph h = seen.at(f).labelled;
        const int d = seen.at(f).dist;
        auto expand = [&](ReflectionKind kind) {
            for (auto& t : legal_reflections(h, kind)) {
                Graph next = apply_reflection(h, t);
                const CanonicalForm nf = canonical_form(next);
                if (seen.count(nf)) continue;
                seen.emplace(nf, Node{f, t, std::move(next), d + 1});
                if (nf == target) return true;
                queue.push_back(nf);
            }
            return false;
        };
        if (expand(ReflectionKind::edge) || (allow_nonedge && expand(ReflectionKind::nonedge))) {
            ReflectionPath out;
            for (CanonicalForm cur = target; !(cur == start); cur = seen.at(cur).parent)
                out.sequence.push_back(seen.at(cur).move);
            std::reverse(out.sequence.begin(), out.sequence.end());
            out.distance = static_cast<int>(out.sequence.size());
            return out;
        }
    }
    throw DomainError("edgeless graph unreachable");  // unreachable: single-edge deletions always apply
}

const std::map<CanonicalForm, int>& edge_reflection_distance_table(int n) {
    caps::require("edge_reflection_distance_table", n, 7, 7);
    static std::mutex mu;
    static std::map<int, std::map<CanonicalForm, int>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto classes = generate_all_graphs(n);
    std::vector<std::pair<int, Graph>> by_edges;
    for (const auto& f : classes) {
        Graph h = graph_from_canonical(f);
        by_edges.push_back({h.edge_count(), std::move(h)});
    }
    std::stable_sort(by_edges.begin(), by_edges.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::map<CanonicalForm, int> table;
    for (const auto& [m, h] : by_edges) {
        if (m == 0) {
            table[canonical_form(h)] = 0;
            continue;
        }
        int best = m;  // one edge at a time always works
        for (const auto& t : legal_reflections(h, ReflectionKind::edge))
            best = std::min(best, 1 + table.at(canonical_form(apply_reflection(h, t))));
        table[canonical_form(h)] = best;
    }
    return cache.emplace(n, std::move(table)).first->second;
}

std::vector<Reflection> greedy_empty(const Graph& g) {
    Graph h = g;
    std::vector<Reflection> seq;
    for (int v = 1; v <= h.n(); ++v) {
        if (h.row(v) == 0) continue;
        const int u = std::countr_zero(h.row(v)) + 1;
        const Reflection t = from_mask(v, u, closed_nbhd(h, v), ReflectionKind::edge);
        h = apply_reflection(h, t);
        seq.push_back(t);
    }
    return seq;
}

std::vector<int> shortest_induced_cycle(const Graph& g) {
    const int n = g.n();
    caps::require("shortest_induced_cycle", n, 10, 16);
    std::vector<int> path;
    // Cycles through `start` on vertices larger than it, closing with an
    // end vertex larger than the second to fix the orientation.
    auto search = [&](auto&& self, int start, int len, Mask used) -> bool {
        const int last = path.back();
        if (static_cast<int>(path.size()) == len)
            return g.adjacent(last, start) && path[len - 1] > path[1];
        for (int w = start + 1; w <= n; ++w) {
            if ((used & bit(w)) || !g.adjacent(last, w)) continue;
            path.push_back(w);
            if (self(self, start, len, used | bit(w))) return true;
            path.pop_back();
        }
        return false;
    };
    for (int len = 3; len <= n; ++len)
        for (int start = 1; start <= n; ++start) {
            path = {start};
            if (search(search, start, len, bit(start))) return path;
        }
    return {};
}

CyclicEmptying cyclic_empty(const Graph& g) {
    const int n = g.n();
    caps::require("cyclic_empty", n, 10, 16);
    CyclicEmptying out;
    out.cycle = shortest_induced_cycle(g);
    if (out.cycle.empty()) throw DomainError("graph has no induced cycle");
    const auto& cyc = out.cycle;
    const int k = static_cast<int>(cyc.size());
    Mask cmask = 0;
    for (int c : cyc) cmask |= bit(c);

    Graph h = g;
    auto apply = [&](int u, int v, Mask X) {
        const Reflection t = from_mask(u, v, X, ReflectionKind::edge);
        h = apply_reflection(h, t);
        out.sequence.push_back(t);
    };

    // Selective isolation of the vertices off the cycle.
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!(cmask & bit(v))) rest.push_back(v);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (h.adjacent(rest[i], rest[j])) {
                apply(rest[i], rest[j], closed_nbhd(h, rest[i]));
                break;
            }
    }
    // Shrink the cycle to the triangle x y z.
    for (int i = 0; i + 3 < k; ++i) apply(cyc[i], cyc[i + 1], closed_nbhd(h, cyc[i]));
    for (bool again = true; again;) {
        again = false;
        for (int v = 1; v <= n; ++v)
            if (std::popcount(h.row(v)) == 1) {
                apply(v, std::countr_zero(h.row(v)) + 1, 0);
                again = true;
            }
    }
    int x = cyc[k - 3], y = cyc[k - 2], z = cyc[k - 1];
    if (!h.adjacent(x, y) || !h.adjacent(y, z) || !h.adjacent(x, z))
        throw DomainError("cycle did not shrink to a triangle");
    auto sets = [&](Mask& X, Mask& Y, Mask& Z, Mask& A) {
        const Mask nx = h.row(x), ny = h.row(y), nz = h.row(z);
        X = ny & nz & ~(nx | bit(x));
        Y = nx & nz & ~(ny | bit(y));
        Z = nx & ny & ~(nz | bit(z));
        A = nx & ny & nz;
    };
    Mask X, Y, Z, A;
    sets(X, Y, Z, A);
    const int nonempty = (X != 0) + (Y != 0) + (Z != 0);
    if (nonempty <= 1) {
        if (Y) std::tie(x, y, z) = std::tuple{y, z, x};
        if (Z) std::tie(x, y, z) = std::tuple{z, x, y};
        apply(y, z, h.row(y) | h.row(z));
    } else {
        apply(y, z, X | A);
        apply(x, z, Y);
        apply(x, y, Z);
    }
    for (int a : members(A))
        if (h.adjacent(x, a)) apply(x, a, 0);
    if (h.edge_count() != 0) throw DomainError("cyclic emptying left edges behind");

    // Components of G - C with an even number of edges into C.
    std::vector<int> off;
    for (int v = 1; v <= n; ++v)
        if (!(cmask & bit(v))) off.push_back(v);
    if (!off.empty()) {
        const Graph rest_graph = induced_subgraph(g, off);
        for (const auto& comp : components(rest_graph)) {
            int edges = 0;
            for (int idx : comp) edges += std::popcount(g.row(off[idx - 1]) & cmask);
            if (edges % 2 == 0) ++out.savings;
        }
    }
    return out;
}

int min_edge_edge_cover(const Graph& g) {
    caps::require("min_edge_edge_cover", g.n(), 9, 10);
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    // Chosen edges must touch every edge, i.e. their endpoints cover all edges.
    auto covers = [&](Mask ends) {
        for (auto [a, b] : edges)
            if (!(ends & (bit(a) | bit(b)))) return false;
        return true;
    };
    for (int size = 1; size <= m; ++size) {
        auto pick = [&](auto&& self, int from, int left, Mask ends) -> bool {
            if (left == 0) return covers(ends);
            for (int i = from; i + left <= m; ++i)
                if (self(self, i + 1, left - 1, ends | bit(edges[i].first) | bit(edges[i].second))) return true;
            return false;
        };
        if (pick(pick, 0, size, 0)) return size;
    }
    return m;
}

TrianglePartition nested_triangle_partition(const Graph& g) {
    const int n = g.n();
    caps::require("nested_triangle_partition", n, 8, 9);
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < m; ++i) index[edges[i]] = i;
    auto eid = [&](int a, int b) { return index.at({std::min(a, b), std::max(a, b)}); };

    struct Block {
        int u, v;
        Mask apexes;
        Mask edge_set;  // over edge indices (m <= 36)
    };
    // Every block: spine uv and a nonempty or empty set of common neighbours.
    std::vector<Block> blocks;
    for (auto [u, v] : edges) {
        const auto common = members(g.row(u) & g.row(v));
        for (Mask s = 0; s < (Mask{1} << common.size()); ++s) {
            Block b{u, v, 0, Mask{1} << eid(u, v)};
            for (std::size_t i = 0; i < common.size(); ++i)
                if ((s >> i) & 1u) {
                    b.apexes |= bit(common[i]);
                    b.edge_set |= (Mask{1} << eid(u, common[i])) | (Mask{1} << eid(v, common[i]));
                }
            blocks.push_back(b);
        }
    }
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const Block& a, const Block& b) { return std::popcount(a.apexes) > std::popcount(b.apexes); });
    int max_size = 1;
    for (const auto& b : blocks) max_size = std::max(max_size, std::popcount(b.edge_set));

    std::vector<int> chosen, best_chosen;
    int best = m + 1;
    const Mask all = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
    auto search = [&](auto&& self, Mask covered) -> void {
        if (covered == all) {
            if (static_cast<int>(chosen.size()) < best) {
                best = static_cast<int>(chosen.size());
                best_chosen = chosen;
            }
            return;
        }
        const int left = m - std::popcount(covered);
        if (static_cast<int>(chosen.size()) + (left + max_size - 1) / max_size >= best) return;
        const int e = std::countr_zero(~covered & all);
        for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
            const auto& b = blocks[i];
            if (!((b.edge_set >> e) & 1u) || (b.edge_set & covered)) continue;
            chosen.push_back(i);
            self(self, covered | b.edge_set);
            chosen.pop_back();
        }
    };
    search(search, 0);

    TrianglePartition out;
    for (int i : best_chosen) {
        const auto& b = blocks[i];
        out.blocks.push_back(from_mask(b.u, b.v, b.apexes, ReflectionKind::edge));
        ++out.counts[std::popcount(b.apexes)];
    }
    std::sort(out.blocks.begin(), out.blocks.end(), [](const Reflection& a, const Reflection& b) {
        return std::tie(a.u, a.v, a.X) < std::tie(b.u, b.v, b.X);
    });
    int saved = 0;
    for (auto [k, count] : out.counts) saved += 2 * k * count;
    out.bound = m - saved;
    return out;
}

}  // namespace invg
