#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "invg/errors.hpp"
#include "invg/inversion_graph.hpp"
#include "invg/pins.hpp"
#include "oracles.hpp"

using namespace invg;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

// Bounding box of the first `count` points, then the slicing test, written
// out directly for the oracle.
bool oracle_valid(const std::vector<Point>& pts) {
    for (std::size_t k = 2; k < pts.size(); ++k) {
        int il = 1 << 20, ih = 0, vl = 1 << 20, vh = 0;
        for (std::size_t a = 0; a < k; ++a) {
            il = std::min(il, pts[a].index), ih = std::max(ih, pts[a].index);
            vl = std::min(vl, pts[a].value), vh = std::max(vh, pts[a].value);
        }
        const auto q = pts[k];
        const bool inside = q.index >= il && q.index <= ih && q.value >= vl && q.value <= vh;
        const bool between = (q.index > il && q.index < ih) || (q.value > vl && q.value < vh);
        if (inside || !between) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("a valid but improper pin sequence") {
    const PinSequence s{P("361425"), {{3, 1}, {4, 4}, {1, 3}, {5, 2}, {2, 6}, {6, 5}}};
    CHECK(validate_pin_sequence(s));
    CHECK(oracle_valid(s.points));
    CHECK_FALSE(is_proper(s));
    CHECK_THROWS_AS(pins_to_chain(s), DomainError);
}

TEST_CASE("a proper pin sequence and its directions") {
    const PinSequence s{P("241536"), {{6, 6}, {4, 5}, {5, 3}, {2, 4}, {3, 1}, {1, 2}}};
    CHECK(validate_pin_sequence(s));
    CHECK(is_proper(s));
    using D = PinDirection;
    CHECK(pin_directions(s) == std::vector<D>{D::down, D::left, D::down, D::left});
    const auto c = pins_to_chain(s);
    CHECK(c == Chain{6, 5, 3, 4, 1, 2});
    const auto g = inversion_graph(s.host);
    CHECK(is_chain(g, c));
    // first pin isolated in the chain's induced subgraph
    for (std::size_t k = 1; k < c.size(); ++k) CHECK_FALSE(g.adjacent(c[0], c[k]));
}

TEST_CASE("points must be entries of the host") {
    const PinSequence s{P("2413"), {{1, 1}, {2, 4}}};
    CHECK_THROWS_AS(validate_pin_sequence(s), DomainError);
}

TEST_CASE("reaching a target pin") {
    const auto s = find_reaching_proper_pin_sequence(P("3142"), {1, 3}, {2, 1}, {4, 2});
    CHECK(is_proper(s));
    CHECK(s.points.front() == Point{1, 3});
    CHECK(s.points[1] == Point{2, 1});
    CHECK(s.points.back() == Point{4, 2});
    CHECK_THROWS_AS(find_reaching_proper_pin_sequence(P("1234"), {1, 1}, {2, 2}, {4, 4}), DomainError);
}

TEST_CASE("reaching pin sequences over all simple permutations of length 5") {
    int built = 0;
    for_each_permutation(5, [&](const Permutation& p) {
        if (!is_simple(p)) return;
        const auto g = inversion_graph(p);
        for (int x = 1; x <= 5; ++x)
            for (int y = 1; y <= 5; ++y)
                for (int z = 1; z <= 5; ++z) {
                    if (x == y || y == z || x == z) continue;
                    const Point px{x, p(x)}, py{y, p(y)}, pz{z, p(z)};
                    const bool inside = z >= std::min(x, y) && z <= std::max(x, y) &&
                                        p(z) >= std::min(p(x), p(y)) && p(z) <= std::max(p(x), p(y));
                    if (inside) continue;
                    const auto s = find_reaching_proper_pin_sequence(p, px, py, pz);
                    CHECK(is_proper(s));
                    CHECK(oracle_valid(s.points));
                    const auto c = pins_to_chain(s);
                    CHECK(is_chain(g, c));
                    const auto h = induced_subgraph(g, c);
                    CHECK((is_connected(h) || is_isomorphic(h, disjoint_union(Graph(1), path_graph(h.n() - 1)))));
                    ++built;
                }
    });
    CHECK(built > 0);
}

TEST_CASE("validation agrees with the direct slicing oracle") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 500; ++t) {
        const auto p = oracle::random_permutation(6, rng);
        std::vector<int> idx{1, 2, 3, 4, 5, 6};
        std::shuffle(idx.begin(), idx.end(), rng);
        const int len = 2 + static_cast<int>(rng() % 5);
        PinSequence s{p, {}};
        for (int k = 0; k < len; ++k) s.points.push_back({idx[k], p(idx[k])});
        CHECK(validate_pin_sequence(s) == oracle_valid(s.points));
    }
}
