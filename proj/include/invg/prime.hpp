#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "invg/graph.hpp"
#include "invg/permutation.hpp"

namespace invg {

bool is_module(const Graph& g, const std::vector<int>& s);
// Smallest nontrivial module, ties broken by the lexicographically least
// sorted vertex list.
std::optional<std::vector<int>> find_nontrivial_module(const Graph& g);
bool is_prime(const Graph& g);

using Chain = std::vector<int>;
bool is_chain(const Graph& g, const Chain& c);
// Shortest chain u, v, ..., w (length >= 3), found by BFS over
// (visited set, last vertex) states.
std::optional<Chain> find_chain(const Graph& g, int u, int v, int w);

struct EdgeClassPartition {
    std::vector<std::pair<int, int>> edges;  // sorted, u < v
    std::vector<int> class_of;               // parallel to edges, 0-based ids
    int count = 0;
    // Class id of edge {u,v}; throws if not an edge.
    int class_of_edge(int u, int v) const;
};
EdgeClassPartition edge_classes(const Graph& g);

// out[u-1] has bit v-1 set iff the arc u -> v is present.
struct Orientation {
    int n = 0;
    std::vector<std::uint64_t> out;
    bool has_arc(int u, int v) const { return (out[u - 1] >> (v - 1)) & 1u; }
    std::vector<std::pair<int, int>> arcs() const;
    bool operator==(const Orientation&) const = default;
};

struct OrientationSet {
    std::uint64_t count = 0;          // exact
    std::vector<Orientation> listed;  // first `cap` in search order
};

inline constexpr std::size_t kOrientationListCap = 64;

OrientationSet transitive_orientations(const Graph& g, std::size_t cap = kOrientationListCap);
std::uint64_t transitive_orientation_count(const Graph& g);
std::optional<Orientation> find_transitive_orientation(const Graph& g);
bool is_transitive_orientation(const Graph& g, const Orientation& o);

// One permutation per pair (orientation of G_p, orientation of its
// complement), in search order; for simple p with n >= 4 there are four.
std::vector<Permutation> recover_permutations_from_orientations(const Permutation& p);

// Every permutation recoverable from some pair of transitive orientations of
// (G, complement G); equals the set of sigma with G_sigma isomorphic to G.
std::vector<Permutation> permutations_from_graph_orientations(const Graph& g);

struct SymmetryReport {
    std::uint64_t automorphisms = 0;
    std::vector<Permutation> images;  // distinct among p, p^-1, p^rc, (p^rc)^-1
    bool consistent = false;          // |Aut| in {1,2,4} and |Aut| * |images| == 4
};
SymmetryReport automorphism_symmetry_check(const Permutation& p);

}  // namespace invg
