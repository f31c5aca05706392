#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "invg/graph.hpp"
#include "invg/permutation.hpp"

namespace invg {

// Vertex v is the entry with value v.
Graph inversion_graph(const Permutation& p);

// Intervals labelled 1..n, described by the order of their left endpoints
// and the order of their right endpoints.
struct IntervalSystem {
    std::vector<int> left_order;
    std::vector<int> right_order;
    int size() const { return static_cast<int>(left_order.size()); }
    bool operator==(const IntervalSystem&) const = default;
};

IntervalSystem to_interval_system(const Permutation& p);
Permutation from_interval_system(const IntervalSystem& s);
// Rank the endpoints of real intervals (label i = intervals[i-1]).
IntervalSystem interval_system_from_endpoints(const std::vector<std::pair<double, double>>& intervals);
// Edge ab iff one interval strictly contains the other.
Graph containment_graph(const IntervalSystem& s);

struct Recognition {
    Permutation perm;
    std::vector<int> mapping;  // mapping[v] = vertex of G_perm matched to v of g
};
std::optional<Recognition> recognize(const Graph& g);

// All sigma in S_n with G_sigma isomorphic to G_p, by exhaustive scan.
std::vector<Permutation> equivalent_permutations(const Permutation& p);

}  // namespace invg
