#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invg {

// Simple undirected graph on vertices 1..n, n <= 64, stored as adjacency
// bitmasks (bit w-1 of row v-1 set iff v ~ w).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[u - 1] >> (v - 1)) & 1u; }
    std::uint64_t row(int v) const { return adj_[v - 1]; }  // 0-based bits
    int degree(int v) const;
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    // Sorted pairs (u, v) with u < v.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph&) const = default;

private:
    void check(int u, int v) const;
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph complement(const Graph& g);
// Vertex k of the result is vs[k-1] of g.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);
// Result has edge perm[u]perm[v] for every edge uv of g (perm is 1-based,
// perm[0] unused).
Graph relabel(const Graph& g, const std::vector<int>& perm);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph matching_graph(int m);  // mK2
Graph nested_triangle(int k);  // K2 joined with k isolated vertices

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

struct CanonicalForm {
    int n = 0;
    // Upper triangle in column-major order (pairs (i,j), j = 2..n, i < j),
    // first pair in the most significant position.
    std::uint64_t bits = 0;
    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<int> order;  // order[k] = vertex placed at position k+1
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph graph_from_canonical(const CanonicalForm& f);
bool is_isomorphic(const Graph& g, const Graph& h);
// iso[v] = image in h of vertex v of g (1-based, iso[0] unused); empty if none.
std::vector<int> find_isomorphism(const Graph& g, const Graph& h);
std::uint64_t automorphism_count(const Graph& g);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

// One canonical form per isomorphism class, sorted.
std::vector<CanonicalForm> generate_all_graphs(int n);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);
bool is_perfect(const Graph& g);

}  // namespace invg
