#include "invg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "invg/errors.hpp"
#include "invg/grid.hpp"
#include "invg/letters.hpp"

namespace invg {

Permutation random_permutation(int n, std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x9e37u};
    std::mt19937_64 rng(seq);
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    // Fisher-Yates with explicit draws so the stream is library independent.
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(v[i], v[j]);
    }
    return Permutation(v);
}

double six_digits(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::strtod(buf, nullptr);
}

namespace {

bool agrees(const Graph& g, int v, int a, int b) { return g.adjacent(v, a) == g.adjacent(v, b); }

}  // namespace

int three_same_letter_triples(const Graph& g) {
    const int n = g.n();
    int count = 0;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) {
                if (x == y || y == z || x == z) continue;
                const int e = g.adjacent(x, y) + g.adjacent(y, z) + g.adjacent(x, z);
                if (e != 0 && e != 3) continue;
                bool ok = true;
                for (int v = 1; v <= n && ok; ++v) {
                    if (v == x || v == y || v == z) continue;
                    ok = agrees(g, v, x, y) || agrees(g, v, y, z);
                }
                count += ok;
            }
    return count;
}

int separated_pair_quadruples(const Graph& g) {
    const int n = g.n();
    int count = 0;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int s = 1; s <= n; ++s)
                for (int t = 1; t <= n; ++t) {
                    if (x == y || x == s || x == t || y == s || y == t || s == t) continue;
                    if (!agrees(g, s, x, y) || !agrees(g, t, x, y) || !agrees(g, x, s, t) || !agrees(g, y, s, t))
                        continue;
                    bool ok = true;
                    for (int v = 1; v <= n && ok; ++v) {
                        if (v == x || v == y || v == s || v == t) continue;
                        ok = agrees(g, v, x, y) || agrees(g, v, s, t);
                    }
                    count += ok;
                }
    return count;
}

std::vector<std::string> experiment_kinds() {
    return {"random-lettericity", "three-same-letter", "separated-pairs", "expected-runs"};
}

namespace {

Json header(const std::string& kind, int n, int samples, std::uint64_t seed) {
    return {{"kind", kind}, {"n", n}, {"samples", samples}, {"seed", seed}};
}

std::string rational_text(const Rational& r) {
    return std::to_string(r.numerator()) + (r.denominator() == 1 ? "" : "/" + std::to_string(r.denominator()));
}

// Shared shape of the two agreement-test experiments.
Json agreement_report(const std::string& kind, int n, int samples, std::uint64_t seed, int arity,
                      int (*count)(const Graph&)) {
    if (n < arity) throw DomainError("n too small for this experiment");
    caps::require(kind, n, 40, 64);
    long long total = 0;
    int with_any = 0;
    for (int i = 0; i < samples; ++i) {
        const int c = count(random_graph(n, seed, static_cast<std::uint64_t>(i)));
        total += c;
        with_any += c > 0;
    }
    double tuples = 1;
    for (int i = 0; i < arity; ++i) tuples *= n - i;
    const double per = std::pow(0.75, n - arity);
    Json r = header(kind, n, samples, seed);
    r["fraction_with_feasible_tuple"] = six_digits(static_cast<double>(with_any) / samples);
    r["mean_feasible_tuples"] = six_digits(static_cast<double>(total) / samples);
    r["reference_per_tuple"] = six_digits(per);
    r["reference_union_bound"] = six_digits(tuples * per);
    return r;
}

}  // namespace

Json run_experiment(const std::string& kind, int n, int samples, std::uint64_t seed) {
    if (samples < 1) throw DomainError("samples must be positive");
    if (n < 1) throw DomainError("n must be positive");
    if (kind == "random-lettericity") {
        const auto t = random_lettericity_trial(n, samples, seed);
        Json r = header(kind, n, samples, seed);
        Json hist = Json::object();
        for (auto [k, c] : t.histogram) hist[std::to_string(k)] = c;
        r["histogram"] = hist;
        r["mean"] = six_digits(t.mean);
        r["reference_n_minus_2log2n"] = six_digits(t.reference_n_minus_2log);
        r["reference_full"] = six_digits(t.reference_full);
        return r;
    }
    if (kind == "three-same-letter") return agreement_report(kind, n, samples, seed, 3, three_same_letter_triples);
    if (kind == "separated-pairs") return agreement_report(kind, n, samples, seed, 4, separated_pair_quadruples);
    if (kind == "expected-runs") {
        caps::require(kind, n, 20, 64);
        long long total = 0;
        for (int i = 0; i < samples; ++i) total += min_monotone_runs(random_permutation(n, seed, static_cast<std::uint64_t>(i)));
        Json r = header(kind, n, samples, seed);
        r["sample_mean"] = six_digits(static_cast<double>(total) / samples);
        const auto e = descent_expectations(n);
        r["bound"] = rational_text(e.bound);
        if (n <= 8) {
            const auto exact = exhaustive_descent_means(n);
            r["exact"] = rational_text(exact.x_r);
            r["exact_decimal"] = six_digits(boost::rational_cast<double>(exact.x_r));
        }
        return r;
    }
    throw DomainError("unknown experiment kind: " + kind);
}

}  // namespace invg
