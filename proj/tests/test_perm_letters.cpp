#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "invg/errors.hpp"
#include "invg/inversion_graph.hpp"
#include "invg/perm_letters.hpp"
#include "oracles.hpp"

using namespace invg;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
using Edges = std::vector<std::pair<int, int>>;

Graph on_vertices(const PermLettericityResult& r) {
    const auto g = decode_perm(r.witness);
    std::vector<int> m(g.n() + 1, 0);
    for (int i = 1; i <= g.n(); ++i) m[i] = r.order[i - 1];
    return relabel(g, m);
}

// The rule applied directly to positions.
Graph oracle_decode(const PermLettering& l) {
    const int n = l.host.size();
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::pair pr{l.word[i - 1], l.word[j - 1]};
            const bool inv = l.host(i) > l.host(j);
            if ((inv && l.I.count(pr)) || (!inv && l.N.count(pr))) g.add_edge(i, j);
        }
    return g;
}

PermLettering random_lettering(int n, int k, std::mt19937_64& rng) {
    PermLettering l;
    l.k = k;
    l.host = oracle::random_permutation(n, rng);
    for (int i = 0; i < n; ++i) l.word.push_back(1 + static_cast<int>(rng() % k));
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) {
            if (rng() & 1u) l.I.insert({a, b});
            if (rng() & 1u) l.N.insert({a, b});
        }
    return l;
}
}  // namespace

TEST_CASE("decoding the worked example") {
    const PermLettering l{3, {1, 1, 2, 3, 3, 2}, P("253614"), {{1, 2}, {2, 3}}, {{1, 3}, {2, 3}}};
    CHECK(decode_perm(l).edges() == Edges{{1, 4}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 5}});
    CHECK(decode_perm(l) == oracle_decode(l));
}

TEST_CASE("degenerate decoders") {
    const auto p = P("31542");
    CHECK(decode_perm(PermLettering{1, {1, 1, 1, 1, 1}, p, {}, {}}).edge_count() == 0);
    const auto g = decode_perm(PermLettering{1, {1, 1, 1, 1, 1}, p, {{1, 1}}, {}});
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) CHECK(g.adjacent(i, j) == (p(i) > p(j)));
    CHECK_THROWS_AS(decode_perm(PermLettering{1, {1, 1}, p, {}, {}}), DomainError);
}

TEST_CASE("random letterings decode by the rule and complement under complemented decoders") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const auto l = random_lettering(2 + t % 7, 1 + t % 3, rng);
        CHECK(decode_perm(l) == oracle_decode(l));
        CHECK(decode_perm(complement_decoders(l)) == complement(decode_perm(l)));
    }
}

TEST_CASE("exact parameter on named graphs") {
    const auto c5 = ell_perm_exact(cycle_graph(5));
    CHECK(c5.k == 2);
    CHECK(on_vertices(c5) == cycle_graph(5));
    CHECK(ell_perm_exact(path_graph(5)).k == 1);
    CHECK(ell_perm_exact(Graph(3)).k == 1);
    CHECK_THROWS_AS(ell_perm_exact(path_graph(7)), SizeCapError);
}

TEST_CASE("exact parameter over all graphs on at most five vertices") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : generate_all_graphs(n)) {
            const auto g = graph_from_canonical(f);
            const auto r = ell_perm_exact(g);
            CHECK(on_vertices(r) == g);
            CHECK(r.k <= (n + 1) / 2);
            CHECK((r.k == 1) == recognize(g).has_value());
        }
}

TEST_CASE("monotone under induced subgraphs") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const int n = 3 + t % 3;
        const auto g = oracle::random_graph(n, rng);
        const std::uint32_t mask = 1 + rng() % ((1u << n) - 1);
        const auto h = induced_subgraph(g, oracle::members(mask, n));
        CHECK(ell_perm_exact(h).k <= ell_perm_exact(g).k);
    }
}

TEST_CASE("universal encoding") {
    const auto u4 = universal_encoding(complete_graph(4));
    CHECK(u4.host == P("2143"));
    CHECK(u4.word == std::vector<int>{2, 1, 1, 2});
    const auto u3 = universal_encoding(path_graph(3));
    CHECK(u3.host == P("213"));
    CHECK(u3.word == std::vector<int>{2, 1, 1});
    for (const auto& f : generate_all_graphs(4)) {
        const auto g = graph_from_canonical(f);
        CHECK(decode_perm(universal_encoding(g)) == g);
    }
    std::mt19937_64 rng(47);
    for (int t = 0; t < 100; ++t) {
        const auto g = oracle::random_graph(1 + t % 12, rng);
        const auto u = universal_encoding(g);
        CHECK(u.k == (g.n() + 1) / 2);
        CHECK(decode_perm(u) == g);
    }
}

TEST_CASE("cycle encoding") {
    for (int n = 5; n <= 9; ++n) {
        const auto l = cycle_encoding(n);
        CHECK(l.k == 2);
        CHECK(is_isomorphic(inversion_graph(l.host), path_graph(n)));
        CHECK(is_isomorphic(decode_perm(l), cycle_graph(n)));
    }
    CHECK(oracle::isomorphic(decode_perm(cycle_encoding(6)), cycle_graph(6)));
    CHECK_THROWS_AS(cycle_encoding(4), DomainError);
}

TEST_CASE("counting bound report") {
    const auto r = counting_bound_report(400, 0.1);
    CHECK(r.k == 40);
    CHECK(r.log2_graphs == doctest::Approx(400.0 * 399 / 2));
    const double lf = std::lgamma(401.0) / std::log(2.0);
    CHECK(r.log2_encodings == doctest::Approx(2 * lf + 400 * std::log2(40.0) + 2.0 * 40 * 40).epsilon(1e-9));
    CHECK(r.bound_holds == (r.log2_encodings < r.log2_graphs));
    CHECK_FALSE(counting_bound_report(10, 0.5).bound_holds);
}
