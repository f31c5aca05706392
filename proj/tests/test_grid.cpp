#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "invg/errors.hpp"
#include "invg/grid.hpp"
#include "invg/inversion_graph.hpp"
#include "oracles.hpp"

using namespace invg;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

GridDrawing running_example() {
    GridDrawing d;
    d.matrix = GridMatrix::from_display({{0, -1, 1}, {1, 0, -1}});
    d.signs = Signs{{1, 1, -1}, {1, -1}};
    d.host = P("13865472");
    d.cell_of = {{1, 1}, {1, 1}, {2, 2}, {2, 2}, {2, 2}, {3, 1}, {3, 2}, {3, 1}};
    d.reading_order = {1, 8, 2, 7, 6, 3, 4, 5};
    return d;
}

// decode(lettering) with position i renamed to the vertex order[i-1].
Graph decoded_on_values(const GridLettering& gl) {
    const auto g = decode(gl.lettering);
    std::vector<int> m(g.n() + 1, 0);
    for (int i = 1; i <= g.n(); ++i) m[i] = gl.order[i - 1];
    return relabel(g, m);
}

bool monotone(const Permutation& p, int lo, int hi) {
    bool up = true, down = true;
    for (int i = lo; i < hi; ++i) (p(i) < p(i + 1) ? down : up) = false;
    return up || down;
}

// Fewest monotone blocks, by trying every set of cut points.
int oracle_runs(const Permutation& p) {
    const int n = p.size();
    int best = n;
    for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        int lo = 1, blocks = 0;
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            if (i == n || (cuts >> (i - 1) & 1u)) {
                ok = monotone(p, lo, i);
                ++blocks;
                lo = i + 1;
            }
        if (ok) best = std::min(best, blocks);
    }
    return best;
}
}  // namespace

TEST_CASE("matrix basics") {
    const auto m = GridMatrix::from_display({{0, -1, 1}, {1, 0, -1}});
    CHECK(m.cols == 3);
    CHECK(m.rows == 2);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(2, 2) == -1);
    CHECK(m.at(3, 1) == -1);
    CHECK(m.at(3, 2) == 1);
    CHECK(m.nonzero_count() == 4);
    CHECK_THROWS_AS(check_matrix(GridMatrix(2, 2)), DomainError);
    GridMatrix bad(1, 1);
    CHECK_THROWS_AS(bad.set(1, 1, 2), DomainError);
}

TEST_CASE("expansion to a partial multiplication matrix") {
    GridMatrix one(1, 1);
    one.set(1, 1, 1);
    const auto e1 = expand_to_pmm(one);
    CHECK(e1.matrix == GridMatrix::from_display({{0, 1}, {1, 0}}));

    const auto m = GridMatrix::from_display({{1, 1}, {1, -1}});
    CHECK_FALSE(is_pmm(m).has_value());
    const auto e = expand_to_pmm(m);
    CHECK(e.matrix.cols == 4);
    CHECK(e.matrix.rows == 4);
    CHECK(e.matrix.nonzero_count() == 8);
    for (int k = 1; k <= 4; ++k) {
        CHECK(e.signs.col[k - 1] == (k % 2 ? -1 : 1));
        CHECK(e.signs.row[k - 1] == (k % 2 ? -1 : 1));
    }
    const auto s = is_pmm(e.matrix);
    REQUIRE(s.has_value());
    // equal to the constructive signs up to one flip per component
    const int flip = s->col[0] * e.signs.col[0];
    for (int k = 0; k < 4; ++k) {
        CHECK(s->col[k] * flip == e.signs.col[k]);
        CHECK(s->row[k] * flip == e.signs.row[k]);
    }
}

TEST_CASE("pmm detection agrees with sign enumeration") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const int c = 1 + static_cast<int>(rng() % 3), r = 1 + static_cast<int>(rng() % 3);
        GridMatrix m(c, r);
        for (int i = 1; i <= c; ++i)
            for (int j = 1; j <= r; ++j) m.set(i, j, static_cast<int>(rng() % 3) - 1);
        if (m.nonzero_count() == 0) m.set(1, 1, 1);
        bool any = false;
        for (std::uint32_t bits = 0; bits < (1u << (c + r)) && !any; ++bits) {
            bool ok = true;
            for (int i = 1; i <= c && ok; ++i)
                for (int j = 1; j <= r && ok; ++j) {
                    const int ci = bits >> (i - 1) & 1u ? -1 : 1, rj = bits >> (c + j - 1) & 1u ? -1 : 1;
                    if (m.at(i, j) != 0 && m.at(i, j) != ci * rj) ok = false;
                }
            any = ok;
        }
        const auto s = is_pmm(m);
        CHECK(s.has_value() == any);
        if (s) {
            for (int i = 1; i <= c; ++i)
                for (int j = 1; j <= r; ++j)
                    if (m.at(i, j)) CHECK(m.at(i, j) == s->col[i - 1] * s->row[j - 1]);
        }
        const auto e = expand_to_pmm(m);
        CHECK(is_pmm(e.matrix).has_value());
    }
}

TEST_CASE("the running drawing") {
    const auto d = running_example();
    CHECK(validate_drawing(d));
    const auto gl = drawing_to_lettering(d);
    CHECK(gl.lettering.k == 4);
    CHECK(gl.lettering.word == std::vector<int>{1, 2, 3, 4, 2, 1, 3, 2});
    CHECK(gl.letter_cells == std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 1}, {3, 2}});
    for (std::pair<int, int> pr : {std::pair{2, 2}, {3, 3}, {2, 3}, {3, 2}, {3, 1}, {2, 4}, {3, 4}})
        CHECK(gl.lettering.decoder.count(pr) == 1);
    CHECK(decoded_on_values(gl) == inversion_graph(d.host));
}

TEST_CASE("drawings that break a constraint are rejected") {
    auto d = running_example();
    d.reading_order = {4, 8, 3, 7, 6, 2, 1, 5};  // row 1 read backwards
    CHECK_FALSE(validate_drawing(d));
    CHECK_THROWS_AS(drawing_to_lettering(d), DomainError);

    d = running_example();
    d.cell_of[0] = {2, 1};  // a zero cell
    CHECK_FALSE(validate_drawing(d));

    d = running_example();
    d.signs.col[0] = -1;
    CHECK_FALSE(validate_drawing(d));
}

TEST_CASE("identity on a single increasing cell") {
    GridDrawing d;
    d.matrix = GridMatrix(1, 1);
    d.matrix.set(1, 1, 1);
    d.signs = Signs{{1}, {1}};
    d.host = Permutation::identity(4);
    d.cell_of.assign(4, {1, 1});
    d.reading_order = {1, 2, 3, 4};
    CHECK(validate_drawing(d));
    const auto gl = drawing_to_lettering(d);
    CHECK(gl.lettering.decoder.empty());
    CHECK(decode(gl.lettering).edge_count() == 0);
}

TEST_CASE("monotone run drawings") {
    const auto d = monotone_run_drawing(P("384961275"));
    CHECK(d.matrix.rows == 1);
    std::vector<int> row;
    for (int c = 1; c <= d.matrix.cols; ++c) row.push_back(d.matrix.at(c, 1));
    CHECK(row == std::vector<int>{1, 1, -1, 1, -1});
    CHECK(validate_drawing(d));
    const auto id = monotone_run_drawing(Permutation::identity(4));
    CHECK(id.matrix.cols == 2);
    CHECK(id.matrix.at(1, 1) == 1);
    CHECK(id.matrix.at(2, 1) == 1);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        const auto p = oracle::random_permutation(1 + t % 10, rng);
        for (const auto& dr : {monotone_run_drawing(p), min_run_drawing(p)}) {
            CHECK(validate_drawing(dr));
            const auto gl = drawing_to_lettering(dr);
            CHECK(decoded_on_values(gl) == inversion_graph(p));
        }
        CHECK(monotone_run_drawing(p).matrix.nonzero_count() == (p.size() + 1) / 2);
        CHECK(min_run_drawing(p).matrix.nonzero_count() == min_monotone_runs(p));
    }
}

TEST_CASE("monotone runs") {
    CHECK(min_monotone_runs(P("347156982")) == 3);
    CHECK(min_monotone_runs(Permutation::identity(6)) == 1);
    CHECK(min_monotone_runs(Permutation::reverse_identity(6)) == 1);
    for_each_permutation(7, [](const Permutation& p) {
        const int xr = min_monotone_runs(p);
        CHECK(xr == oracle_runs(p));
        const auto prof = descent_profile(p);
        CHECK(xr <= 1 + prof.x_d - prof.x_ddd - prof.x_ddadd);
    });
}

TEST_CASE("descent expectations") {
    const auto e6 = descent_expectations(6);
    CHECK(e6.formulas_valid);
    CHECK(e6.x_d == Rational(5, 2));
    CHECK(e6.x_ddd == Rational(1, 8));
    CHECK(e6.x_ddadd == Rational(19, 720));
    CHECK(e6.bound == Rational(2411, 720));
    CHECK(descent_expectations(7).x_d == Rational(3));
    CHECK_FALSE(descent_expectations(4).formulas_valid);
    for (int n = 6; n <= 7; ++n) {
        const auto e = descent_expectations(n);
        const auto m = exhaustive_descent_means(n);
        CHECK(m.x_d == e.x_d);
        CHECK(m.x_ddd == e.x_ddd);
        CHECK(m.x_ddadd == e.x_ddadd);
        CHECK(m.x_r <= e.bound);
    }
    // the mean of X_r, recomputed here
    long long total = 0;
    for_each_permutation(6, [&](const Permutation& p) { total += oracle_runs(p); });
    CHECK(exhaustive_descent_means(6).x_r == Rational(total, 720));
    CHECK_THROWS_AS(exhaustive_descent_means(9), SizeCapError);
}

TEST_CASE("lettericity of inversion graphs is bounded by the run statistics") {
    for_each_permutation(6, [](const Permutation& p) {
        const auto r = lettericity_exact(inversion_graph(p));
        REQUIRE(r.has_value());
        CHECK(r->k <= 3);
    });
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
        const auto p = oracle::random_permutation(7, rng);
        CHECK(lettericity_exact(inversion_graph(p))->k <= min_monotone_runs(p));
    }
}
