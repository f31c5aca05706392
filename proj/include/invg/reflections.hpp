#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "invg/graph.hpp"
#include "invg/permutation.hpp"

namespace invg {

enum class ReflectionKind { edge, nonedge };

// t_{uv}^X: toggles uw and vw for w in X \ {u,v}, and toggles uv itself.
struct Reflection {
    int u = 0;
    int v = 0;
    std::vector<int> X;  // sorted, contains u and v
    ReflectionKind kind = ReflectionKind::edge;
    bool operator==(const Reflection&) const = default;
};

Reflection make_reflection(int u, int v, std::vector<int> X, ReflectionKind kind);

// Edge kind: uv is an edge and each other member of X sees u or v.
// Nonedge kind: uv is not an edge and no other member of X sees both.
bool is_legal(const Graph& g, const Reflection& t);
Graph apply_reflection(const Graph& g, const Reflection& t);
// Applies the sequence in order, checking legality at each step.
Graph replay(const Graph& g, const std::vector<Reflection>& seq);

// Pairs u < v in order, then toggle sets by increasing bitmask of the
// eligible vertices.
std::vector<Reflection> legal_reflections(const Graph& g, ReflectionKind kind);

// Reflection on G_p (value labels) realising the reduction of inversion (i, j).
Reflection reduction_to_reflection(const Permutation& p, int i, int j);

enum class BruhatOrder { strong, weak };
enum class BruhatDirection { up, down };
std::set<Permutation> bruhat_neighbors(const Permutation& p, BruhatOrder which, BruhatDirection dir);
// Shortest path to the identity along down arcs of the strong order.
int bruhat_distance_to_identity(const Permutation& p);

struct ReflectionPath {
    int distance = 0;
    std::vector<Reflection> sequence;  // replays g to the edgeless graph
};
ReflectionPath bfs_to_edgeless(const Graph& g, bool allow_nonedge);

// Edge-only distance to the edgeless graph for every isomorphism class on n
// vertices, computed bottom-up by edge count.
const std::map<CanonicalForm, int>& edge_reflection_distance_table(int n);

// Isolates vertices 1..n in turn with t_{v,u}^{N[v]}, u the smallest neighbour.
std::vector<Reflection> greedy_empty(const Graph& g);

struct CyclicEmptying {
    std::vector<int> cycle;             // the induced cycle used
    std::vector<Reflection> sequence;   // replays g to the edgeless graph
    int savings = 0;                    // components of G - C with an even number of edges to C
};
CyclicEmptying cyclic_empty(const Graph& g);

// Shortest cycle (hence induced), lexicographically least among those
// starting at their smallest vertex; empty if g is a forest.
std::vector<int> shortest_induced_cycle(const Graph& g);

int min_edge_edge_cover(const Graph& g);

struct TrianglePartition {
    std::vector<Reflection> blocks;  // each clears one block: spine u v, apexes X \ {u,v}
    std::map<int, int> counts;       // k -> number of N_k blocks
    int bound = 0;                   // m - 2 sum k n_k = number of blocks
};
// Fewest blocks partitioning the edges into nested triangles.
TrianglePartition nested_triangle_partition(const Graph& g);

std::string to_string(ReflectionKind k);

}  // namespace invg
