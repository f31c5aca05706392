#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "invg/errors.hpp"
#include "invg/inversion_graph.hpp"
#include "oracles.hpp"

using namespace invg;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
using Edges = std::vector<std::pair<int, int>>;
}

TEST_CASE("inversion graph examples") {
    CHECK(inversion_graph(P("31542")).edges() == Edges{{1, 3}, {2, 3}, {2, 4}, {2, 5}, {4, 5}});
    CHECK(inversion_graph(P("2413")).edges() == Edges{{1, 2}, {1, 4}, {3, 4}});
    for_each_permutation(5, [](const Permutation& p) { CHECK(inversion_graph(p) == oracle::inversion_graph(p)); });
}

TEST_CASE("interval systems") {
    // Left endpoints in label order; right endpoints ordered 1,4,3,5,2.
    const auto s = interval_system_from_endpoints({{0, 2}, {1, 9}, {3, 6}, {4, 5}, {7, 8}});
    CHECK(from_interval_system(s) == P("14352"));
    for_each_permutation(6, [](const Permutation& p) {
        const auto sys = to_interval_system(p);
        CHECK(from_interval_system(sys) == p);
        CHECK(containment_graph(sys) == inversion_graph(p));
    });
}

TEST_CASE("recognition") {
    CHECK_FALSE(recognize(cycle_graph(5)).has_value());
    const auto p4 = recognize(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(oracle::maps_onto(path_graph(4), inversion_graph(p4->perm), p4->mapping));
    const auto e = recognize(Graph(4));
    REQUIRE(e.has_value());
    CHECK(e->perm == Permutation::identity(4));
    for_each_permutation(6, [](const Permutation& p) {
        const auto g = inversion_graph(p);
        const auto r = recognize(g);
        REQUIRE(r.has_value());
        CHECK(oracle::maps_onto(g, inversion_graph(r->perm), r->mapping));
    });
}

TEST_CASE("recognition fails exactly on non-inversion graphs at n = 5") {
    std::set<oracle::Labelled> inv;
    for_each_permutation(5, [&](const Permutation& p) { inv.insert(oracle::canonical_key(oracle::inversion_graph(p))); });
    for (const auto& g : oracle::all_graphs_up_to_iso(5))
        CHECK(recognize(g).has_value() == (inv.count(oracle::canonical_key(g)) > 0));
}

TEST_CASE("equivalent permutations") {
    CHECK(equivalent_permutations(P("3142")) == std::vector<Permutation>{P("2413"), P("3142")});
    CHECK(equivalent_permutations(P("1234")) == std::vector<Permutation>{P("1234")});
    const auto p = P("25314");
    std::vector<Permutation> brute;
    for_each_permutation(5, [&](const Permutation& q) {
        if (oracle::isomorphic(oracle::inversion_graph(q), oracle::inversion_graph(p))) brute.push_back(q);
    });
    CHECK(equivalent_permutations(p) == brute);
}

TEST_CASE("inverse gives an isomorphic inversion graph") {
    for_each_permutation(6, [](const Permutation& p) {
        CHECK(is_isomorphic(inversion_graph(p), inversion_graph(inverse(p))));
    });
}

TEST_CASE("sums correspond to union and join") {
    const auto s3 = all_permutations(3);
    for (const auto& a : s3)
        for (int m = 1; m <= 3; ++m)
            for (const auto& b : all_permutations(m)) {
                const auto ga = inversion_graph(a), gb = inversion_graph(b);
                CHECK(is_isomorphic(inversion_graph(sum(a, b, SumKind::direct)), disjoint_union(ga, gb)));
                CHECK(is_isomorphic(inversion_graph(sum(a, b, SumKind::skew)), join(ga, gb)));
            }
}

TEST_CASE("inversion graphs are perfect") {
    for_each_permutation(7, [](const Permutation& p) {
        const auto g = inversion_graph(p);
        CHECK(clique_number(g) == chromatic_number(g));
    });
    for_each_permutation(6, [](const Permutation& p) { CHECK(is_perfect(inversion_graph(p))); });
}
