#pragma once

#include <optional>

#include "invg/graph.hpp"
#include "invg/letters.hpp"
#include "invg/permutation.hpp"

namespace invg {

// Positions i < j are adjacent iff (w(i), w(j)) is in I when host(i) >
// host(j), or in N otherwise.
struct PermLettering {
    int k = 0;
    std::vector<int> word;
    Permutation host;
    LetterPairs I, N;
    bool operator==(const PermLettering&) const = default;
};

Graph decode_perm(const PermLettering& l);

// Same lettering with I and N replaced by their complements in [k]^2.
PermLettering complement_decoders(const PermLettering& l);

struct PermLettericityResult {
    int k = 0;
    PermLettering witness;
    std::vector<int> order;  // vertex of g at each position
};
// Least k over all hosts, words and decoders; n <= 5.
PermLettericityResult ell_perm_exact(const Graph& g);

// Host m..1 (+) (n-m)..1 with m = ceil(n/2), word l_m..l_1 l_1..l_(n-m);
// position i is vertex i of g.
PermLettering universal_encoding(const Graph& g);

// Two letters, decoding to the n-cycle (n >= 5).
PermLettering cycle_encoding(int n);

// Counting argument for l_perm(G) > alpha n, evaluated in log2: C(n,2)
// against log2((n!)^2 k^n 2^(2k^2)) with k = floor(alpha n), and against the
// cruder n^(2n) (alpha n)^n 2^(2 (alpha n)^2).
struct CountingBoundReport {
    int n = 0;
    double alpha = 0;
    int k = 0;
    double log2_graphs = 0;
    double log2_encodings = 0;
    double log2_crude = 0;
    bool bound_holds = false;  // encodings < graphs, so some graph needs more than k letters
};
CountingBoundReport counting_bound_report(int n, double alpha);

}  // namespace invg
