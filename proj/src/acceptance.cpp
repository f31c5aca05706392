#include "invg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <tuple>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "invg/errors.hpp"
#include "invg/experiments.hpp"
#include "invg/grid.hpp"
#include "invg/inversion_graph.hpp"
#include "invg/letters.hpp"
#include "invg/perm_letters.hpp"
#include "invg/prime.hpp"
#include "invg/reflections.hpp"

namespace invg {

namespace {

// Counts checks and keeps the first few failure messages.
struct Tally {
    long long checks = 0;
    long long failed = 0;
    std::vector<std::string> messages;

    template <class Msg>
    void expect(bool ok, Msg&& msg) {
        ++checks;
        if (ok) return;
        ++failed;
        if (messages.size() < 5) messages.push_back(msg());
    }

    std::pair<bool, std::string> result() const {
        std::ostringstream out;
        out << checks << " checks";
        if (failed) {
            out << ", " << failed << " failed:";
            for (const auto& m : messages) out << " [" << m << "]";
        }
        return {failed == 0 && checks > 0, out.str()};
    }
};

std::vector<Graph> catalog(int n) {
    std::vector<Graph> out;
    for (const auto& f : generate_all_graphs(n)) out.push_back(graph_from_canonical(f));
    return out;
}

std::string edges_text(const Graph& g) {
    std::string s = "n=" + std::to_string(g.n()) + " {";
    for (auto [u, v] : g.edges()) s += std::to_string(u) + std::to_string(v) + " ";
    return s + "}";
}

Tally criterion1() {
    Tally t;
    const auto code = lehmer_encode(Permutation::parse("37168254"));
    t.expect(code == LehmerCode{2, 5, 0, 3, 3, 0, 1, 0}, [] { return std::string("code of 37168254"); });
    for_each_permutation(7, [&](const Permutation& p) {
        t.expect(lehmer_decode(lehmer_encode(p)) == p, [&] { return "round trip " + p.str(); });
    });
    return t;
}

Tally criterion2() {
    Tally t;
    for (int n = 1; n <= 8; ++n) {
        std::vector<std::uint64_t> hist(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
        for_each_permutation(n, [&](const Permutation& p) { ++hist[length(p)]; });
        t.expect(inversion_polynomial(n) == hist, [n] { return "histogram n=" + std::to_string(n); });
    }
    for (int n = 3; n <= 10; ++n) {
        const auto c = inversion_polynomial(n);
        for (std::size_t k = 1; k + 1 < c.size(); ++k)
            t.expect(c[k] * c[k] >= c[k - 1] * c[k + 1],
                     [&] { return "log-concavity n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
    return t;
}

Tally criterion3() {
    Tally t;
    for_each_permutation(6, [&](const Permutation& p) {
        t.expect(is_simple(p) == is_prime(inversion_graph(p)), [&] { return p.str(); });
    });
    return t;
}

Tally criterion4() {
    Tally t;
    for (int n = 3; n <= 7; ++n)
        for (const auto& g : catalog(n)) {
            if (!is_prime(g)) continue;
            const int classes = edge_classes(g).count;
            const auto orientations = transitive_orientation_count(g);
            t.expect(classes == 1 && (orientations == 0 || orientations == 2), [&] {
                return edges_text(g) + " classes=" + std::to_string(classes) +
                       " orientations=" + std::to_string(orientations);
            });
        }
    return t;
}

std::vector<Permutation> symmetry_images(const Permutation& p) {
    const Permutation rc = symmetry(p, Symmetry::reverse_complement);
    std::set<Permutation> s{p, inverse(p), rc, inverse(rc)};
    return {s.begin(), s.end()};
}

Tally criterion5() {
    Tally t;
    for_each_permutation(6, [&](const Permutation& p) {
        if (!is_simple(p)) return;
        auto eq = equivalent_permutations(p);
        std::sort(eq.begin(), eq.end());
        t.expect(eq == symmetry_images(p), [&] { return "equivalents of " + p.str(); });
        const auto aut = automorphism_count(inversion_graph(p));
        t.expect(aut == 1 || aut == 2 || aut == 4, [&] { return "|Aut| of " + p.str(); });
    });
    return t;
}

Tally criterion6() {
    Tally t;
    std::map<CanonicalForm, bool> cache;
    for_each_permutation(7, [&](const Permutation& p) {
        const Graph g = inversion_graph(p);
        const auto f = canonical_form(g);
        auto it = cache.find(f);
        if (it == cache.end()) it = cache.emplace(f, is_perfect(g)).first;
        t.expect(it->second, [&] { return p.str(); });
    });
    return t;
}

Graph threshold_abaabb() { return decode(Lettering{2, {1, 2, 1, 1, 2, 2}, {{1, 2}, {2, 2}}}); }

Tally criterion7() {
    Tally t;
    auto expect_ell = [&](const Graph& g, int want, const std::string& label) {
        const auto r = lettericity_exact(g);
        t.expect(r && r->k == want && encodes(g, r->witness), [&] {
            return label + " expected " + std::to_string(want) + " got " + (r ? std::to_string(r->k) : "none");
        });
    };
    expect_ell(matching_graph(2), 2, "2K2");
    expect_ell(matching_graph(3), 3, "3K2");
    for (int n = 3; n <= 7; ++n) expect_ell(path_graph(n), (n + 4) / 3, "P" + std::to_string(n));
    for (int n = 1; n <= 7; ++n) expect_ell(complete_graph(n), 1, "K" + std::to_string(n));
    expect_ell(threshold_abaabb(), 2, "abaabb threshold graph");
    return t;
}

Tally criterion8() {
    Tally t;
    std::map<CanonicalForm, int> ell;
    for_each_permutation(6, [&](const Permutation& p) {
        const Graph g = inversion_graph(p);
        const auto gl = drawing_to_lettering(monotone_run_drawing(p));
        std::vector<int> to_value(7, 0);
        for (int i = 0; i < 6; ++i) to_value[i + 1] = gl.order[i];
        t.expect(relabel(decode(gl.lettering), to_value) == g && gl.lettering.k <= 3,
                 [&] { return "run drawing of " + p.str(); });
        const auto f = canonical_form(g);
        auto it = ell.find(f);
        if (it == ell.end()) {
            const auto r = lettericity_exact(g);
            it = ell.emplace(f, r ? r->k : 99).first;
        }
        t.expect(it->second <= 3, [&] { return "lettericity of G_" + p.str(); });
    });
    return t;
}

Tally criterion9() {
    Tally t;
    for (int n : {6, 7}) {
        const auto exact = exhaustive_descent_means(n);
        const auto formula = descent_expectations(n);
        t.expect(exact.x_d == formula.x_d && exact.x_ddd == formula.x_ddd && exact.x_ddadd == formula.x_ddadd,
                 [n] { return "descent means n=" + std::to_string(n); });
        t.expect(exact.x_r <= formula.bound, [n] { return "E[X_r] bound n=" + std::to_string(n); });
    }
    for_each_permutation(7, [&](const Permutation& p) {
        const auto d = descent_profile(p);
        t.expect(min_monotone_runs(p) <= 1 + d.x_d - d.x_ddd - d.x_ddadd, [&] { return "bar deletion " + p.str(); });
    });
    return t;
}

Tally criterion10() {
    Tally t;
    const PermLettering fig{3, {1, 1, 2, 3, 3, 2}, Permutation::parse("253614"), {{1, 2}, {2, 3}}, {{1, 3}, {2, 3}}};
    t.expect(decode_perm(fig) == Graph::from_edges(6, {{1, 4}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 5}}),
             [] { return std::string("253614 / aabccb example"); });
    t.expect(ell_perm_exact(cycle_graph(5)).k == 2, [] { return std::string("l_perm(C5)"); });
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : catalog(n)) {
            const int k = ell_perm_exact(g).k;
            t.expect(k <= (n + 1) / 2, [&] { return "bound " + edges_text(g); });
            t.expect((k == 1) == recognize(g).has_value(), [&] { return "k=1 vs recognition " + edges_text(g); });
        }
    return t;
}

Tally criterion11() {
    Tally t;
    auto edge_dist = [](const Graph& g) { return bfs_to_edgeless(g, false).distance; };
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : catalog(n)) {
            if (!is_forest(g)) continue;
            const int d = edge_dist(g);
            t.expect(d == g.edge_count(), [&] { return "forest " + edges_text(g); });
            if (is_tree(g)) t.expect(d == n - 1, [&] { return "tree " + edges_text(g); });
        }
    for (int n = 3; n <= 7; ++n) t.expect(edge_dist(cycle_graph(n)) == n - 2, [n] { return "C" + std::to_string(n); });
    for (int n = 1; n <= 7; ++n)
        t.expect(edge_dist(complete_graph(n)) == n / 2, [n] { return "K" + std::to_string(n); });
    t.expect(edge_dist(complete_bipartite(3, 3)) == 3, [] { return std::string("K33"); });
    for (int k = 0; k <= 5; ++k) t.expect(edge_dist(nested_triangle(k)) == 1, [k] { return "N" + std::to_string(k); });
    for (int n = 1; n <= 6; ++n) {
        const auto& table = edge_reflection_distance_table(n);
        for (const auto& [f, d] : table) {
            const Graph g = graph_from_canonical(f);
            t.expect((d == n - 1) == is_tree(g), [&] { return "n-1 iff tree " + edges_text(g); });
        }
    }
    return t;
}

Tally criterion12() {
    Tally t;
    const Graph p6 = path_graph(6);
    const auto edge_only = bfs_to_edgeless(p6, false);
    const auto mixed = bfs_to_edgeless(p6, true);
    t.expect(edge_only.distance == 5, [] { return std::string("edge-only"); });
    t.expect(mixed.distance == 3, [] { return std::string("mixed"); });
    t.expect(replay(p6, edge_only.sequence).edge_count() == 0 && replay(p6, mixed.sequence).edge_count() == 0,
             [] { return std::string("witness replay"); });
    return t;
}

Tally criterion13() {
    Tally t;
    for_each_permutation(5, [&](const Permutation& p) {
        for (auto [i, j] : inversion_list(p)) {
            auto v = p.values();
            std::swap(v[i - 1], v[j - 1]);
            t.expect(apply_reflection(inversion_graph(p), reduction_to_reflection(p, i, j)) ==
                         inversion_graph(Permutation(v)),
                     [&] { return p.str() + " inversion " + std::to_string(i) + std::to_string(j); });
        }
        t.expect(bruhat_distance_to_identity(p) == absolute_length(p), [&] { return "Bruhat " + p.str(); });
    });
    const auto& table = edge_reflection_distance_table(6);
    for_each_permutation(6, [&](const Permutation& p) {
        const Graph g = inversion_graph(p);
        const int d = table.at(canonical_form(g));
        const int abs_len = absolute_length(p);
        t.expect(d <= abs_len, [&] { return "distance bound " + p.str(); });
        t.expect(!is_forest(g) || d == abs_len, [&] { return "forest equality " + p.str(); });
        t.expect((length(p) == abs_len) == is_forest(g), [&] { return "l = l' iff forest " + p.str(); });
    });
    return t;
}

Tally criterion14() {
    Tally t;
    for (int n = 1; n <= 6; ++n) {
        const auto& table = edge_reflection_distance_table(n);
        for (const auto& g : catalog(n)) {
            const auto greedy = greedy_empty(g);
            t.expect(static_cast<int>(greedy.size()) <= n - 1 && replay(g, greedy).edge_count() == 0,
                     [&] { return "greedy " + edges_text(g); });
            if (!is_forest(g)) {
                const auto cyc = cyclic_empty(g);
                t.expect(static_cast<int>(cyc.sequence.size()) <= n - 2 && replay(g, cyc.sequence).edge_count() == 0,
                         [&] { return "cyclic " + edges_text(g); });
            }
            t.expect(min_edge_edge_cover(g) <= table.at(canonical_form(g)), [&] { return "cover " + edges_text(g); });
        }
    }
    return t;
}

void for_each_chain(const Graph& g, std::size_t max_len, const std::function<void(const Chain&)>& f) {
    Chain c;
    auto grow = [&](auto&& self) -> void {
        if (c.size() >= 2 && c.size() % 2 == 0) f(c);
        if (c.size() == max_len) return;
        for (int v = 1; v <= g.n(); ++v) {
            if (std::find(c.begin(), c.end(), v) != c.end()) continue;
            c.push_back(v);
            if (is_chain(g, c)) self(self);
            c.pop_back();
        }
    };
    grow(grow);
}

Tally criterion15() {
    Tally t;
    for (const auto& g : catalog(7)) {
        const auto r = palindromic_savings(g);
        t.expect(r.k >= 2 && encodes(g, r.full) && r.full.lettering.k == 7 - r.k,
                 [&] { return "palindromic " + edges_text(g); });
    }
    for (int n = 4; n <= 6; ++n)
        for (const auto& g : catalog(n)) {
            if (!is_prime(g)) continue;
            for_each_chain(g, 6, [&](const Chain& c) {
                const auto e = encode_chain(g, c);
                const bool last_at_end = e.order.front() == c.back() || e.order.back() == c.back();
                t.expect(encodes(g, e) && last_at_end && is_crossing_nested_shape(e.lettering.word), [&] {
                    std::string s = "chain";
                    for (int v : c) s += " " + std::to_string(v);
                    return s + " in " + edges_text(g);
                });
            });
        }
    return t;
}

Tally criterion16() {
    Tally t;
    const std::vector<std::tuple<std::string, int, int>> runs{
        {"random-lettericity", 5, 40}, {"three-same-letter", 7, 200}, {"separated-pairs", 7, 100}, {"expected-runs", 7, 500}};
    for (const auto& [kind, n, samples] : runs) {
        const auto a = run_experiment(kind, n, samples, 2024).dump();
        const auto b = run_experiment(kind, n, samples, 2024).dump();
        t.expect(a == b, [&] { return "reproducibility " + kind; });
    }
    const auto three = run_experiment("three-same-letter", 7, 10, 1);
    t.expect(three["reference_per_tuple"].get<double>() == 0.316406 &&
                 three["reference_union_bound"].get<double>() == 66.4453,
             [] { return std::string("(3/4)^(n-3) reference at n=7"); });
    const auto sep = run_experiment("separated-pairs", 8, 10, 1);
    t.expect(sep["reference_per_tuple"].get<double>() == 0.316406 && std::abs(sep["reference_union_bound"].get<double>() - 531.5625) < 1e-3,
             [] { return std::string("(3/4)^(n-4) reference at n=8"); });
    const auto lt = random_lettericity_trial(6, 5, 1);
    t.expect(six_digits(lt.reference_n_minus_2log) == 0.830075, [] { return std::string("n - 2 log2 n at n=6"); });
    const auto two = random_lettericity_trial(2, 20, 3);
    t.expect(two.histogram.size() == 1 && two.histogram.count(1), [] { return std::string("n=2 lettericity"); });
    t.expect(descent_expectations(6).bound == Rational(2411, 720), [] { return std::string("bound at n=6"); });
    const auto counting = counting_bound_report(400, 0.1);
    t.expect(counting.bound_holds && counting.log2_encodings <= counting.log2_crude,
             [] { return std::string("counting report n=400 alpha=0.1"); });
    return t;
}

}  // namespace

std::string criterion_name(int id) {
    static const char* names[] = {"",
                                  "Lehmer codes",
                                  "inversion polynomial",
                                  "simple iff prime",
                                  "edge classes of prime graphs",
                                  "uniqueness up to symmetry",
                                  "perfection",
                                  "lettericity values",
                                  "gridding bound",
                                  "descent expectations",
                                  "permutation letter graphs",
                                  "reflection families",
                                  "mixed reflections",
                                  "reduction correspondence",
                                  "constructive emptying",
                                  "letter-saving constructions",
                                  "seeded reports"};
    if (id < 1 || id > kCriteriaCount) throw DomainError("no such criterion");
    return names[id];
}

CriterionResult run_criterion(int id) {
    using Fn = Tally (*)();
    static const Fn fns[] = {nullptr,      criterion1,  criterion2,  criterion3,  criterion4,  criterion5,
                             criterion6,   criterion7,  criterion8,  criterion9,  criterion10, criterion11,
                             criterion12,  criterion13, criterion14, criterion15, criterion16};
    CriterionResult r;
    r.id = id;
    r.name = criterion_name(id);
    const auto start = std::chrono::steady_clock::now();
    try {
        std::tie(r.pass, r.detail) = fns[id]().result();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
    std::vector<int> todo = ids;
    if (todo.empty())
        for (int i = 1; i <= kCriteriaCount; ++i) todo.push_back(i);
    std::sort(todo.begin(), todo.end());
    std::vector<CriterionResult> out;
    for (int id : todo) out.push_back(run_criterion(id));
    return out;
}

}  // namespace invg
