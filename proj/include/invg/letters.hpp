#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "invg/graph.hpp"
#include "invg/prime.hpp"

namespace invg {

using LetterPairs = std::set<std::pair<int, int>>;

// Letters are 1..k; decoder holds ordered letter pairs.
struct Lettering {
    int k = 0;
    std::vector<int> word;
    LetterPairs decoder;
    bool operator==(const Lettering&) const = default;
};

// Graph on positions 1..|word|: i < j adjacent iff (w(i), w(j)) in decoder.
Graph decode(const Lettering& l);

// A lettering together with the vertex of the target graph sitting at each
// position (order[pos-1]).
struct Encoding {
    Lettering lettering;
    std::vector<int> order;
};

// decode(e.lettering), relabelled through e.order, equals g restricted to
// the vertices in e.order.
bool encodes(const Graph& g, const Encoding& e);

int cochromatic_number(const Graph& g);

struct LettericityResult {
    int k = 0;
    Encoding witness;  // letters by first occurrence, lexicographically least word
};
std::optional<LettericityResult> lettericity_exact(const Graph& g, int k_max = 5);

// Extends an encoding of G[H] whose word has the shape l1..lk l_pi(1)..l_pi(k)
// to all of g, one fresh letter per vertex outside H, placed in the middle.
Encoding extend_lettering(const Graph& g, const Encoding& inner);

struct PalindromicResult {
    int k = 0;
    Encoding inner;  // word l1..lk lk..l1 on H
    Encoding full;   // n - k letters
};
PalindromicResult palindromic_savings(const Graph& g);

// Encoding of G[chain] by a word l1..lk l_pi(1)..l_pi(k); the chain's last
// vertex sits at the first or last position.
Encoding encode_chain(const Graph& g, const Chain& chain);

// Nests `inner` inside the two halves of `outer` (both of the shape above,
// on disjoint vertex sets) and reads the cross decoder pairs off g.
Encoding nest_encodings(const Graph& g, const Encoding& outer, const Encoding& inner);

// True iff the word is l1..lk followed by a permutation of those letters.
bool is_crossing_nested_shape(const std::vector<int>& word);

struct LettericityTrial {
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::map<int, int> histogram;
    double mean = 0;
    double reference_n_minus_2log = 0;  // n - 2 log2 n
    double reference_full = 0;          // n - (2 log2 n + 2 log2 log2 n)
};
LettericityTrial random_lettericity_trial(int n, int samples, std::uint64_t seed);

// G(n, 1/2) sample number `index` of the stream identified by `seed`.
Graph random_graph(int n, std::uint64_t seed, std::uint64_t index);

}  // namespace invg
