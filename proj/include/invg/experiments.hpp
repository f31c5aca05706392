#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invg/json_io.hpp"

namespace invg {

// Uniform element of S_n, sample `index` of the stream named by `seed`.
Permutation random_permutation(int n, std::uint64_t seed, std::uint64_t index);

// Rounds to six significant digits for report output.
double six_digits(double x);

// Ordered triples (x,y,z) passing the agreement test for sharing one letter:
// a clique or anticlique where every other vertex agrees on all three, on
// {x,y}, or on {y,z}.
int three_same_letter_triples(const Graph& g);
// Ordered quadruples (x,y,s,t) where x,y agree on s,t and s,t agree on x,y,
// and every other vertex agrees on {x,y} or on {s,t}.
int separated_pair_quadruples(const Graph& g);

std::vector<std::string> experiment_kinds();
// Deterministic report; throws DomainError on an unknown kind.
Json run_experiment(const std::string& kind, int n, int samples, std::uint64_t seed);

}  // namespace invg
