#include "invg/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "invg/errors.hpp"

namespace invg {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 64) throw DomainError("graph size must be in 0..64");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_) throw DomainError("vertex out of range");
    if (u == v) throw DomainError("loops are not allowed");
}

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

int Graph::edge_count() const {
    int twice = 0;
    for (auto r : adj_) twice += std::popcount(r);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    check(u, v);
    adj_[u - 1] |= std::uint64_t{1} << (v - 1);
    adj_[v - 1] |= std::uint64_t{1} << (u - 1);
}

void Graph::remove_edge(int u, int v) {
    check(u, v);
    adj_[u - 1] &= ~(std::uint64_t{1} << (v - 1));
    adj_[v - 1] &= ~(std::uint64_t{1} << (u - 1));
}

void Graph::toggle_edge(int u, int v) {
    check(u, v);
    adj_[u - 1] ^= std::uint64_t{1} << (v - 1);
    adj_[v - 1] ^= std::uint64_t{1} << (u - 1);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 1; w <= n_; ++w)
        if (adjacent(v, w)) out.push_back(w);
    return out;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    const int k = static_cast<int>(vs.size());
    Graph h(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(vs[a], vs[b])) h.add_edge(a + 1, b + 1);
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.n() + b.n());
    for (auto [u, v] : a.edges()) h.add_edge(u, v);
    for (auto [u, v] : b.edges()) h.add_edge(u + a.n(), v + a.n());
    return h;
}

Graph join(const Graph& a, const Graph& b) {
    Graph h = disjoint_union(a, b);
    for (int u = 1; u <= a.n(); ++u)
        for (int v = 1; v <= b.n(); ++v) h.add_edge(u, a.n() + v);
    return h;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) { return join(Graph(a), Graph(b)); }

Graph matching_graph(int m) {
    Graph g(2 * m);
    for (int i = 0; i < m; ++i) g.add_edge(2 * i + 1, 2 * i + 2);
    return g;
}

Graph nested_triangle(int k) { return join(complete_graph(2), Graph(k)); }

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int s = 1; s <= g.n(); ++s) {
        if ((seen >> (s - 1)) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << (s - 1), frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f) + 1);
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        std::vector<int> c;
        for (std::uint64_t f = comp; f; f &= f - 1) c.push_back(std::countr_zero(f) + 1);
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

bool is_forest(const Graph& g) {
    return g.edge_count() == g.n() - static_cast<int>(components(g).size());
}

bool is_tree(const Graph& g) { return g.n() >= 1 && is_connected(g) && g.edge_count() == g.n() - 1; }

namespace {

constexpr int kCanonSoftCap = 9;
constexpr int kCanonHardCap = 11;  // 55 bits of upper triangle

// Iterated colour refinement; colours are ranks of (colour, sorted neighbour
// colours) signatures, so the partition and its order are isomorphism invariant.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v + 1);
    int classes = -1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (std::uint64_t r = g.row(v + 1); r; r &= r - 1)
                sig[v].second.push_back(color[std::countr_zero(r)]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        const int now = static_cast<int>(uniq.size());
        if (now == classes) break;
        classes = now;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    int total_bits;
    std::vector<int> slot_color;
    std::vector<std::vector<int>> members;
    std::vector<int> cur;
    std::uint64_t used = 0;
    bool have = false;
    std::uint64_t best = 0;
    std::vector<int> best_order;

    void run(int k, std::uint64_t code) {
        if (k == n) {
            if (!have || code < best) {
                have = true;
                best = code;
                best_order = cur;
            }
            return;
        }
        const int bits_after = (k + 1) * k / 2;
        for (int v : members[slot_color[k]]) {
            if ((used >> v) & 1u) continue;
            std::uint64_t next = code;
            const std::uint64_t r = g.row(v + 1);
            for (int i = 0; i < k; ++i) next = (next << 1) | ((r >> cur[i]) & 1u);
            if (have && next > (best >> (total_bits - bits_after))) continue;
            used |= std::uint64_t{1} << v;
            cur.push_back(v);
            run(k + 1, next);
            cur.pop_back();
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    caps::require("canonical_form", g.n(), kCanonSoftCap, kCanonHardCap);
    const int n = g.n();
    CanonicalLabeling out;
    out.form.n = n;
    if (n == 0) return out;
    auto color = refine_colors(g);
    const int ncol = *std::max_element(color.begin(), color.end()) + 1;
    CanonSearch s{g, n, n * (n - 1) / 2, {}, std::vector<std::vector<int>>(ncol), {}, 0, false, 0, {}};
    for (int v = 0; v < n; ++v) s.members[color[v]].push_back(v);
    for (int c = 0; c < ncol; ++c)
        for (std::size_t i = 0; i < s.members[c].size(); ++i) s.slot_color.push_back(c);
    s.run(0, 0);
    out.form.bits = s.best;
    for (int v : s.best_order) out.order.push_back(v + 1);
    return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph graph_from_canonical(const CanonicalForm& f) {
    Graph g(f.n);
    int bit = f.n * (f.n - 1) / 2;
    for (int j = 2; j <= f.n; ++j)
        for (int i = 1; i < j; ++i)
            if ((f.bits >> --bit) & 1u) g.add_edge(i, j);
    return g;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

std::vector<int> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return {};
    auto lg = canonical_labeling(g), lh = canonical_labeling(h);
    if (lg.form != lh.form) return {};
    std::vector<int> iso(g.n() + 1, 0);
    for (int k = 0; k < g.n(); ++k) iso[lg.order[k]] = lh.order[k];
    return iso;
}

namespace {

struct AutSearch {
    const Graph& g;
    int n;
    std::vector<int> color;
    std::vector<int> image;
    std::uint64_t used = 0;
    std::uint64_t count = 0;

    void run(int v) {
        if (v == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (((used >> w) & 1u) || color[w] != color[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u + 1, v + 1) == g.adjacent(image[u] + 1, w + 1);
            if (!ok) continue;
            image[v] = w;
            used |= std::uint64_t{1} << w;
            run(v + 1);
            used &= ~(std::uint64_t{1} << w);
        }
    }
};

}  // namespace

std::uint64_t automorphism_count(const Graph& g) {
    caps::require("automorphism_count", g.n(), kCanonSoftCap, kCanonHardCap);
    AutSearch s{g, g.n(), refine_colors(g), std::vector<int>(g.n()), 0, 0};
    s.run(0);
    return s.count;
}

std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    if (n > 62) throw DomainError("graph6 long form is not supported (n > 62)");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");
    const int first = static_cast<unsigned char>(text[0]);
    if (first == 126) throw ParseError("graph6 long form is not supported");
    if (first < 63 || first > 125) throw ParseError("invalid graph6 size byte");
    const int n = first - 63;
    const int bits = n * (n - 1) / 2;
    const std::size_t expect = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expect) throw ParseError("graph6 length does not match vertex count");
    Graph g(n);
    int idx = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++idx) {
            const int byte = static_cast<unsigned char>(text[1 + idx / 6]);
            if (byte < 63 || byte > 126) throw ParseError("invalid graph6 data byte");
            if (((byte - 63) >> (5 - idx % 6)) & 1) g.add_edge(i, j);
        }
    for (std::size_t k = 1; k < text.size(); ++k) {
        const int byte = static_cast<unsigned char>(text[k]);
        if (byte < 63 || byte > 126) throw ParseError("invalid graph6 data byte");
    }
    // Padding bits must be zero for bit-exact round trips.
    if (bits % 6 != 0) {
        const int last = static_cast<unsigned char>(text.back()) - 63;
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero graph6 padding");
    }
    return g;
}

std::vector<CanonicalForm> generate_all_graphs(int n) {
    caps::require("generate_all_graphs", n, 7, 8);
    if (n < 1) throw DomainError("generate_all_graphs needs n >= 1");
    static std::recursive_mutex mu;
    static std::map<int, std::vector<CanonicalForm>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (n == 1) return cache[1] = {canonical_form(Graph(1))};
    const std::vector<CanonicalForm> smaller = generate_all_graphs(n - 1);
    std::set<CanonicalForm> forms;
    for (const auto& f : smaller) {
        const Graph base = graph_from_canonical(f);
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
            Graph g(n);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (int v = 1; v < n; ++v)
                if ((nb >> (v - 1)) & 1u) g.add_edge(v, n);
            forms.insert(canonical_form(g));
        }
    }
    return cache[n] = std::vector<CanonicalForm>(forms.begin(), forms.end());
}

namespace {

int clique_in(const Graph& g, std::uint64_t cand) {
    if (!cand) return 0;
    const int v = std::countr_zero(cand);
    const std::uint64_t rest = cand & ~(std::uint64_t{1} << v);
    const int with = 1 + clique_in(g, rest & g.row(v + 1));
    if (with > std::popcount(rest)) return with;
    return std::max(with, clique_in(g, rest));
}

bool colorable(const Graph& g, const std::vector<int>& verts, std::size_t i, std::vector<int>& col, int k,
               int used) {
    if (i == verts.size()) return true;
    const int v = verts[i];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = !(col[verts[j]] == c && g.adjacent(v + 1, verts[j] + 1));
        if (!ok) continue;
        col[v] = c;
        if (colorable(g, verts, i + 1, col, k, std::max(used, c + 1))) return true;
    }
    col[v] = -1;
    return false;
}

int chromatic_in(const Graph& g, std::uint64_t mask, int lower) {
    std::vector<int> verts;
    for (std::uint64_t m = mask; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    if (verts.empty()) return 0;
    std::vector<int> col(g.n(), -1);
    for (int k = std::max(1, lower);; ++k)
        if (colorable(g, verts, 0, col, k, 0)) return k;
}

std::uint64_t all_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

int clique_number(const Graph& g) { return clique_in(g, all_mask(g.n())); }

int chromatic_number(const Graph& g) { return chromatic_in(g, all_mask(g.n()), clique_number(g)); }

bool is_perfect(const Graph& g) {
    caps::require("is_perfect", g.n(), 8, 10);
    for (std::uint64_t mask = 1; mask <= all_mask(g.n()); ++mask) {
        const int omega = clique_in(g, mask);
        if (chromatic_in(g, mask, omega) != omega) return false;
    }
    return true;
}

}  // namespace invg
