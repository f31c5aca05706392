#include "invg/inversion_graph.hpp"

#include <algorithm>
#include <set>

#include "invg/errors.hpp"
#include "invg/prime.hpp"

namespace invg {

Graph inversion_graph(const Permutation& p) {
    const int n = p.size();
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) g.add_edge(p(i), p(j));
    return g;
}

IntervalSystem to_interval_system(const Permutation& p) {
    IntervalSystem s;
    for (int i = 1; i <= p.size(); ++i) {
        s.left_order.push_back(i);
        s.right_order.push_back(p(i));
    }
    return s;
}

namespace {

// position[label] within an order; rejects repeated or foreign labels.
std::vector<int> positions_of(const std::vector<int>& order, int n) {
    std::vector<int> pos(n + 1, 0);
    for (int k = 0; k < static_cast<int>(order.size()); ++k) {
        const int label = order[k];
        if (label < 1 || label > n) throw DomainError("interval label out of range");
        if (pos[label]) throw DomainError("duplicate endpoint rank for interval " + std::to_string(label));
        pos[label] = k + 1;
    }
    return pos;
}

}  // namespace

Permutation from_interval_system(const IntervalSystem& s) {
    const int n = s.size();
    if (static_cast<int>(s.right_order.size()) != n) throw DomainError("endpoint orders differ in length");
    const auto by_left = positions_of(s.left_order, n);
    positions_of(s.right_order, n);
    std::vector<int> v;
    for (int label : s.right_order) v.push_back(by_left[label]);
    return Permutation(std::move(v));
}

IntervalSystem interval_system_from_endpoints(const std::vector<std::pair<double, double>>& intervals) {
    const int n = static_cast<int>(intervals.size());
    std::vector<double> all;
    for (auto [l, r] : intervals) {
        if (!(l < r)) throw DomainError("interval must have l < r");
        all.push_back(l);
        all.push_back(r);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw DomainError("duplicate endpoint");
    IntervalSystem s;
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    s.left_order = labels;
    s.right_order = labels;
    std::sort(s.left_order.begin(), s.left_order.end(),
              [&](int a, int b) { return intervals[a - 1].first < intervals[b - 1].first; });
    std::sort(s.right_order.begin(), s.right_order.end(),
              [&](int a, int b) { return intervals[a - 1].second < intervals[b - 1].second; });
    return s;
}

Graph containment_graph(const IntervalSystem& s) {
    const int n = s.size();
    const auto l = positions_of(s.left_order, n);
    const auto r = positions_of(s.right_order, n);
    Graph g(n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b && l[a] < l[b] && r[b] < r[a]) g.add_edge(a, b);
    return g;
}

std::optional<Recognition> recognize(const Graph& g) {
    caps::require("recognize", g.n(), 9, 12);
    const int n = g.n();
    auto t = find_transitive_orientation(g);
    if (!t) return std::nullopt;
    const Graph gc = complement(g);
    auto tc = find_transitive_orientation(gc);
    if (!tc) return std::nullopt;
    // Index order: arcs of T together with arcs of T'. Value order: T reversed
    // together with T'. An arc u -> v of T then puts u left of and above v.
    std::vector<int> index(n + 1, 1), value(n + 1, 1);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v) continue;
            if (t->has_arc(u, v)) {
                ++index[v];
                ++value[u];
            } else if (tc->has_arc(u, v)) {
                ++index[v];
                ++value[v];
            }
        }
    std::vector<int> vals(n, 0);
    for (int v = 1; v <= n; ++v) {
        if (index[v] > n || vals[index[v] - 1]) throw DomainError("orientation union is not a linear order");
        vals[index[v] - 1] = value[v];
    }
    Recognition rec{Permutation(std::move(vals)), std::vector<int>(n + 1, 0)};
    for (int v = 1; v <= n; ++v) rec.mapping[v] = value[v];
    if (relabel(g, rec.mapping) != inversion_graph(rec.perm))
        throw DomainError("recognition produced an inconsistent witness");
    return rec;
}

std::vector<Permutation> equivalent_permutations(const Permutation& p) {
    caps::require("equivalent_permutations", p.size(), 7, 9);
    const Graph g = inversion_graph(p);
    const auto target = canonical_form(g);
    const int inv = length(p);
    std::vector<int> degs;
    for (int v = 1; v <= g.n(); ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    std::vector<Permutation> out;
    for_each_permutation(p.size(), [&](const Permutation& s) {
        if (length(s) != inv) return;
        const Graph h = inversion_graph(s);
        std::vector<int> d;
        for (int v = 1; v <= h.n(); ++v) d.push_back(h.degree(v));
        std::sort(d.begin(), d.end());
        if (d != degs) return;
        if (canonical_form(h) == target) out.push_back(s);
    });
    return out;
}

}  // namespace invg
