#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "invg/errors.hpp"
#include "invg/inversion_graph.hpp"
#include "invg/permutation.hpp"
#include "oracles.hpp"

using namespace invg;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}

TEST_CASE("construction rejects non-bijections") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
    CHECK_THROWS_AS(Permutation({0, 1}), DomainError);
    CHECK_THROWS_AS(Permutation::parse("12a"), ParseError);
    CHECK(P("3,1,2") == P("312"));
    CHECK(P("3 1 10 2 4 5 6 7 8 9").size() == 10);
}

TEST_CASE("lehmer code examples") {
    CHECK(lehmer_encode(P("12345")) == LehmerCode{0, 0, 0, 0, 0});
    CHECK(lehmer_encode(P("4321")) == LehmerCode{3, 2, 1, 0});
    CHECK(lehmer_decode({3, 2, 1, 0}) == P("4321"));
    CHECK(lehmer_encode(P("37168254")) == LehmerCode{2, 5, 0, 3, 3, 0, 1, 0});
    CHECK_THROWS_AS(lehmer_decode({2, 0}), DomainError);
}

TEST_CASE("lehmer code is a bijection and ranks follow lexicographic order") {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t r = 0;
        std::set<LehmerCode> codes;
        for (const auto& p : all_permutations(n)) {
            const auto c = lehmer_encode(p);
            CHECK(lehmer_decode(c) == p);
            CHECK(lehmer_rank(p) == r);
            CHECK(lehmer_unrank(n, r) == p);
            codes.insert(c);
            int total = 0;
            for (int x : c) total += x;
            CHECK(total == oracle::inversions(p));
            ++r;
        }
        CHECK(codes.size() == factorial(n));
    }
}

TEST_CASE("inversions and the inversion polynomial") {
    CHECK(inversion_list(P("2413")) == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 4}});
    CHECK(inversion_polynomial(3) == std::vector<std::uint64_t>{1, 2, 2, 1});
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::uint64_t> counts(n * (n - 1) / 2 + 1, 0);
        for_each_permutation(n, [&](const Permutation& p) {
            CHECK(length(p) == oracle::inversions(p));
            ++counts[length(p)];
        });
        const auto poly = inversion_polynomial(n);
        CHECK(poly == counts);
        // log-concave and symmetric
        for (std::size_t i = 1; i + 1 < poly.size(); ++i) CHECK(poly[i] * poly[i] >= poly[i - 1] * poly[i + 1]);
        for (std::size_t i = 0; i < poly.size(); ++i) CHECK(poly[i] == poly[poly.size() - 1 - i]);
    }
}

TEST_CASE("symmetries") {
    CHECK(inverse(P("3142")) == P("2413"));
    CHECK(symmetry(P("3142"), Symmetry::reverse_complement) == P("3142"));
    CHECK(symmetry(P("132"), Symmetry::reverse) == P("231"));
    CHECK(symmetry(P("132"), Symmetry::complement) == P("312"));
    for_each_permutation(6, [](const Permutation& p) {
        for (auto s : {Symmetry::inverse, Symmetry::reverse, Symmetry::complement, Symmetry::reverse_complement})
            CHECK(symmetry(symmetry(p, s), s) == p);
        CHECK(compose(p, inverse(p)) == Permutation::identity(6));
    });
}

TEST_CASE("direct and skew sums") {
    const auto a = P("21");
    CHECK(sum(sum(a, a, SumKind::direct), a, SumKind::direct) == P("214365"));
    CHECK(sum(P("12"), P("12"), SumKind::skew) == P("3412"));
}

TEST_CASE("pattern containment") {
    const auto m = contains_pattern(P("25134"), P("132"));
    REQUIRE(m.has_value());
    CHECK(m->values == std::vector<int>{2, 5, 3});
    CHECK(m->indices == std::vector<int>{1, 2, 4});
    CHECK_FALSE(contains_pattern(P("25134"), P("321")).has_value());
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto p = oracle::random_permutation(7, rng);
        const auto q = oracle::random_permutation(3 + t % 2, rng);
        CHECK(contains_pattern(p, q).has_value() == oracle::contains(p, q));
    }
}

TEST_CASE("descents and segmentation") {
    const auto p = P("675419823");
    CHECK(descent_profile(p).descent_set == std::vector<int>{2, 3, 4, 6, 7});
    CHECK(descent_segmentation(p) == "67|5|4|19|8|23");
}

TEST_CASE("absolute length") {
    CHECK(absolute_length(P("3421")) == 3);
    CHECK(absolute_length(P("4231")) == 1);
    CHECK(absolute_length(P("1234")) == 0);
}

TEST_CASE("intervals and simplicity") {
    const auto iv = find_interval(P("3,1,6,4,7,5,9,2,10,8"));
    REQUIRE(iv.has_value());
    CHECK(*iv == Interval{3, 6, 4, 7});
    CHECK(is_simple(P("3142")));
    CHECK(is_simple(P("2413")));
    CHECK_FALSE(is_simple(P("1234")));
    // simple iff the value set of every proper window of length >= 2 is not contiguous
    for (int n = 4; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            bool simple = true;
            for (int i = 1; i <= n && simple; ++i)
                for (int j = i + 1; j <= n && simple; ++j) {
                    if (i == 1 && j == n) continue;
                    int lo = n, hi = 1;
                    for (int k = i; k <= j; ++k) lo = std::min(lo, p(k)), hi = std::max(hi, p(k));
                    if (hi - lo == j - i) simple = false;
                }
            CHECK(is_simple(p) == simple);
        });
}

TEST_CASE("321 and 3412 avoidance matches length equality and forests") {
    for_each_permutation(6, [](const Permutation& p) {
        const bool avoids = !oracle::contains(p, P("321")) && !oracle::contains(p, P("3412"));
        CHECK((length(p) == absolute_length(p)) == avoids);
        CHECK(is_forest(oracle::inversion_graph(p)) == avoids);
    });
}
