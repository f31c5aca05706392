#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invg {

// One-line notation, 1-based: p(i) for i in 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);  // validates bijection

    static Permutation identity(int n);
    static Permutation reverse_identity(int n);
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(v_.size()); }
    int operator()(int i) const { return v_[i - 1]; }
    const std::vector<int>& values() const { return v_; }

    // Position of value x.
    int index_of(int x) const;

    std::string str() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> v_;
};

using LehmerCode = std::vector<int>;

LehmerCode lehmer_encode(const Permutation& p);
Permutation lehmer_decode(const LehmerCode& c);

// Rank in lexicographic order of S_n, 0-based.
std::uint64_t lehmer_rank(const Permutation& p);
Permutation lehmer_unrank(int n, std::uint64_t rank);

std::vector<std::pair<int, int>> inversion_list(const Permutation& p);
int length(const Permutation& p);  // number of inversions

// Coefficients of prod_{j=1..n} (1 + q + ... + q^{j-1}); n <= 12.
std::vector<std::uint64_t> inversion_polynomial(int n);

enum class Symmetry { inverse, reverse, complement, reverse_complement };
Permutation symmetry(const Permutation& p, Symmetry which);
Permutation inverse(const Permutation& p);

enum class SumKind { direct, skew };
Permutation sum(const Permutation& p, const Permutation& q, SumKind kind);

// (p ∘ q)(i) = p(q(i))
Permutation compose(const Permutation& p, const Permutation& q);

struct PatternMatch {
    std::vector<int> indices;  // increasing positions in the host
    std::vector<int> values;   // host values at those positions
};
// Leftmost witness in lexicographic order of index tuples.
std::optional<PatternMatch> contains_pattern(const Permutation& p, const Permutation& pat);

struct DescentProfile {
    std::vector<int> descent_set;
    int x_d = 0;
    int x_ddd = 0;
    int x_ddadd = 0;
};
DescentProfile descent_profile(const Permutation& p);
// Splits the one-line notation at every descent, e.g. "67|5|4|19|8|23".
std::string descent_segmentation(const Permutation& p);

std::vector<int> cycle_lengths(const Permutation& p);  // sorted descending
int absolute_length(const Permutation& p);

struct Interval {
    int index_lo, index_hi;
    int value_lo, value_hi;
    bool operator==(const Interval&) const = default;
};
std::optional<Interval> find_interval(const Permutation& p);
bool is_simple(const Permutation& p);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// Calls f on every permutation of S_n in lexicographic order without
// materialising the list.
template <class F>
void for_each_permutation(int n, F&& f);

std::uint64_t factorial(int n);

}  // namespace invg

#include <algorithm>
#include <numeric>

template <class F>
void invg::for_each_permutation(int n, F&& f) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}
