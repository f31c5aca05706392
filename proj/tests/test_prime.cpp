#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "invg/errors.hpp"
#include "invg/inversion_graph.hpp"
#include "invg/prime.hpp"
#include "oracles.hpp"

using namespace invg;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Graph> prime_graphs(int n) {
    std::vector<Graph> out;
    for (const auto& f : generate_all_graphs(n)) {
        const auto g = graph_from_canonical(f);
        if (oracle::is_prime(g)) out.push_back(g);
    }
    return out;
}
}  // namespace

TEST_CASE("modules") {
    CHECK(is_module(path_graph(3), {1, 3}));
    CHECK_FALSE(is_module(path_graph(4), {1, 2}));
    const auto m = find_nontrivial_module(path_graph(3));
    REQUIRE(m.has_value());
    CHECK(*m == std::vector<int>{1, 3});
    CHECK_FALSE(find_nontrivial_module(path_graph(4)).has_value());
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const auto g = oracle::random_graph(3 + t % 4, rng);
        const std::uint32_t mask = rng() % (1u << g.n());
        const auto s = oracle::members(mask, g.n());
        if (!s.empty()) CHECK(is_module(g, s) == oracle::is_module(g, s));
        CHECK(is_prime(g) == oracle::is_prime(g));
    }
}

TEST_CASE("prime graph counts") {
    // Brute-force counts on the catalog, then the library.
    for (int n = 3; n <= 6; ++n) {
        int lib = 0;
        for (const auto& f : generate_all_graphs(n)) lib += is_prime(graph_from_canonical(f));
        CHECK(lib == static_cast<int>(prime_graphs(n).size()));
    }
    CHECK(prime_graphs(4).size() == 1);
    CHECK(prime_graphs(5).size() == 4);
}

TEST_CASE("chains") {
    const auto g = inversion_graph(P("2413"));
    const auto c = find_chain(g, 2, 1, 3);
    REQUIRE(c.has_value());
    CHECK(*c == Chain{2, 1, 4, 3});
    CHECK(is_chain(g, *c));

    // u, v inside a module and w outside: no chain.
    const auto p3 = path_graph(3);
    CHECK_FALSE(find_chain(p3, 1, 3, 2).has_value());
}

TEST_CASE("prime graphs have chains between every admissible triple") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& g : prime_graphs(n))
            for (int u = 1; u <= n; ++u)
                for (int v = 1; v <= n; ++v)
                    for (int w = 1; w <= n; ++w) {
                        if (u == v || v == w || u == w) continue;
                        const auto c = find_chain(g, u, v, w);
                        REQUIRE(c.has_value());
                        CHECK(is_chain(g, *c));
                        CHECK(c->front() == u);
                        CHECK((*c)[1] == v);
                        CHECK(c->back() == w);
                        // the induced subgraph on a chain is connected or P1 + P(m-1)
                        const auto h = induced_subgraph(g, *c);
                        const auto comps = components(h);
                        const bool shape = is_connected(h) ||
                                           (comps.size() == 2 && std::min(comps[0].size(), comps[1].size()) == 1 &&
                                            is_isomorphic(h, disjoint_union(Graph(1), path_graph(h.n() - 1))));
                        CHECK(shape);
                    }
}

TEST_CASE("chain existence characterises primality on n <= 5") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& f : generate_all_graphs(n)) {
            const auto g = graph_from_canonical(f);
            bool all = true;
            for (int u = 1; u <= n && all; ++u)
                for (int v = 1; v <= n && all; ++v)
                    for (int w = 1; w <= n && all; ++w)
                        if (u != v && v != w && u != w) all = find_chain(g, u, v, w).has_value();
            CHECK(all == oracle::is_prime(g));
        }
}

TEST_CASE("edge classes") {
    CHECK(edge_classes(matching_graph(2)).count == 2);
    CHECK(edge_classes(path_graph(4)).count == 1);
    CHECK(edge_classes(complete_graph(4)).count == 6);
    const auto ec = edge_classes(path_graph(4));
    CHECK(ec.class_of_edge(1, 2) == ec.class_of_edge(3, 4));
    CHECK_THROWS_AS(ec.class_of_edge(1, 3), DomainError);
}

TEST_CASE("transitive orientations") {
    CHECK(transitive_orientation_count(cycle_graph(5)) == 0);
    CHECK(transitive_orientation_count(path_graph(4)) == 2);
    CHECK(transitive_orientation_count(complete_graph(3)) == 6);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 80; ++t) {
        const auto g = oracle::random_graph(3 + t % 4, rng);
        if (g.edge_count() > 12) continue;
        const auto set = transitive_orientations(g);
        CHECK(set.count == oracle::transitive_orientations(g));
        for (const auto& o : set.listed) CHECK(is_transitive_orientation(g, o));
        CHECK(find_transitive_orientation(g).has_value() == (set.count > 0));
    }
    // prime graphs: 0 or 2
    for (int n = 4; n <= 6; ++n)
        for (const auto& g : prime_graphs(n)) {
            const auto c = transitive_orientation_count(g);
            CHECK((c == 0 || c == 2));
        }
}

TEST_CASE("recovering permutations from orientations") {
    auto got = recover_permutations_from_orientations(P("3142"));
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Permutation>{P("2413"), P("2413"), P("3142"), P("3142")});
    const auto r = recover_permutations_from_orientations(P("35142"));
    CHECK(r.size() == 4);
    CHECK(std::find(r.begin(), r.end(), P("42513")) != r.end());
    for (const auto& s : r) CHECK(is_isomorphic(inversion_graph(s), inversion_graph(P("35142"))));
    CHECK_THROWS_AS(recover_permutations_from_orientations(P("1234")), DomainError);

    for_each_permutation(5, [](const Permutation& p) {
        auto a = permutations_from_graph_orientations(inversion_graph(p));
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        CHECK(a == equivalent_permutations(p));
    });
}

TEST_CASE("symmetry check on simple permutations") {
    const auto rep = automorphism_symmetry_check(P("2413"));
    CHECK(rep.automorphisms == 2);
    CHECK(rep.images.size() == 2);
    CHECK(rep.consistent);
    for_each_permutation(6, [](const Permutation& p) {
        if (!is_simple(p)) return;
        const auto s = automorphism_symmetry_check(p);
        CHECK(s.consistent);
        CHECK(s.images.size() == equivalent_permutations(p).size());
    });
}

TEST_CASE("intervals are modules and simple permutations give prime graphs") {
    for_each_permutation(6, [](const Permutation& p) {
        const auto g = inversion_graph(p);
        for (int i = 1; i <= 6; ++i)
            for (int j = i; j <= 6; ++j) {
                int lo = 6, hi = 1;
                std::vector<int> vals;
                for (int k = i; k <= j; ++k) lo = std::min(lo, p(k)), hi = std::max(hi, p(k)), vals.push_back(p(k));
                if (hi - lo == j - i) CHECK(is_module(g, vals));
            }
        CHECK(is_simple(p) == is_prime(g));
    });
}
