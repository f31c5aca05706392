#include "invg/perm_letters.hpp"

#include <cmath>
#include <tuple>

#include "invg/errors.hpp"

namespace invg {

Graph decode_perm(const PermLettering& l) {
    const int n = static_cast<int>(l.word.size());
    if (l.host.size() != n) throw DomainError("word and host lengths differ");
    for (int a : l.word)
        if (a < 1 || a > l.k) throw DomainError("word letter outside 1..k");
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const std::pair<int, int> key{l.word[i - 1], l.word[j - 1]};
            const bool inv = l.host(i) > l.host(j);
            if (inv ? l.I.count(key) > 0 : l.N.count(key) > 0) g.add_edge(i, j);
        }
    return g;
}

PermLettering complement_decoders(const PermLettering& l) {
    PermLettering out = l;
    out.I.clear();
    out.N.clear();
    for (int a = 1; a <= l.k; ++a)
        for (int b = 1; b <= l.k; ++b) {
            if (!l.I.count({a, b})) out.I.insert({a, b});
            if (!l.N.count({a, b})) out.N.insert({a, b});
        }
    return out;
}

namespace {

// Joint search over vertex order and word for one fixed host; decoder
// entries are inferred lazily as in the lettericity solver.
struct PermSearch {
    const Graph& g;
    const Permutation& host;
    int n;
    int k;
    std::vector<signed char> inv{}, non{};  // k*k each, -1 unknown
    std::vector<int> word{}, order{};
    std::uint64_t used = 0;
    int letters_used = 0;
    bool have = false;
    std::vector<int> best_word{}, best_order{};
    LetterPairs best_I{}, best_N{};

    static LetterPairs pairs_of(const std::vector<signed char>& m, int k) {
        LetterPairs out;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (m[a * k + b] == 1) out.insert({a + 1, b + 1});
        return out;
    }

    int prefix_cmp(int t) const {
        for (int i = 0; i < t; ++i)
            if (word[i] != best_word[i]) return word[i] < best_word[i] ? -1 : 1;
        return 0;
    }

    void run(int t) {
        if (t == n) {
            LetterPairs I = pairs_of(inv, k), N = pairs_of(non, k);
            if (!have || std::tie(word, I, N) < std::tie(best_word, best_I, best_N)) {
                have = true;
                best_word = word;
                best_order = order;
                best_I = std::move(I);
                best_N = std::move(N);
            }
            return;
        }
        const int top = std::min(letters_used, k - 1);
        for (int a = 0; a <= top; ++a) {
            const int lu = letters_used + (a == letters_used ? 1 : 0);
            if (lu + (n - t - 1) < k) continue;
            for (int v = 1; v <= n; ++v) {
                if (have) {
                    const int c = prefix_cmp(t);
                    if (c > 0 || (c == 0 && a > best_word[t])) return;
                }
                if ((used >> (v - 1)) & 1u) continue;
                std::vector<std::pair<std::vector<signed char>*, int>> changed;
                bool ok = true;
                for (int s = 0; s < t && ok; ++s) {
                    auto& m = host(s + 1) > host(t + 1) ? inv : non;
                    const int idx = word[s] * k + a;
                    const signed char need = g.adjacent(order[s], v) ? 1 : 0;
                    if (m[idx] < 0) {
                        m[idx] = need;
                        changed.push_back({&m, idx});
                    } else if (m[idx] != need) {
                        ok = false;
                    }
                }
                if (ok) {
                    word[t] = a;
                    order[t] = v;
                    used |= std::uint64_t{1} << (v - 1);
                    const int saved = letters_used;
                    letters_used = lu;
                    run(t + 1);
                    letters_used = saved;
                    used &= ~(std::uint64_t{1} << (v - 1));
                }
                for (auto [m, idx] : changed) (*m)[idx] = -1;
            }
        }
    }
};

}  // namespace

PermLettericityResult ell_perm_exact(const Graph& g) {
    const int n = g.n();
    caps::require("ell_perm_exact", n, 5, 6);
    if (n == 0) return {0, {0, {}, Permutation::identity(0), {}, {}}, {}};
    for (int k = 1; k <= n; ++k) {
        const auto hosts = factorial(n);
        for (std::uint64_t rank = 0; rank < hosts; ++rank) {
            const Permutation host = lehmer_unrank(n, rank);
            PermSearch s{g, host, n, k};
            s.inv.assign(static_cast<std::size_t>(k * k), -1);
            s.non.assign(static_cast<std::size_t>(k * k), -1);
            s.word.assign(n, 0);
            s.order.assign(n, 0);
            s.run(0);
            if (!s.have) continue;
            PermLettericityResult r;
            r.k = k;
            r.order = s.best_order;
            r.witness.k = k;
            r.witness.host = host;
            for (int a : s.best_word) r.witness.word.push_back(a + 1);
            r.witness.I = s.best_I;
            r.witness.N = s.best_N;
            std::vector<int> perm(n + 1, 0);
            for (int i = 0; i < n; ++i) perm[i + 1] = r.order[i];
            if (relabel(decode_perm(r.witness), perm) != g) throw DomainError("l_perm witness failed to decode");
            return r;
        }
    }
    throw DomainError("no permutation lettering found");  // unreachable: k = n always works
}

PermLettering universal_encoding(const Graph& g) {
    const int n = g.n();
    if (n == 0) return {0, {}, Permutation::identity(0), {}, {}};
    const int m = (n + 1) / 2;
    std::vector<int> host(n), word(n);
    for (int i = 1; i <= m; ++i) {
        host[i - 1] = m + 1 - i;
        word[i - 1] = m + 1 - i;
    }
    for (int j = 1; j <= n - m; ++j) {
        host[m + j - 1] = n + 1 - j;
        word[m + j - 1] = j;
    }
    PermLettering l{m, word, Permutation(host), {}, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (g.adjacent(i, j)) {
                auto& dec = l.host(i) > l.host(j) ? l.I : l.N;
                dec.insert({word[i - 1], word[j - 1]});
            }
    if (decode_perm(l) != g) throw DomainError("universal encoding failed to decode");
    return l;
}

PermLettering cycle_encoding(int n) {
    if (n < 5) throw DomainError("cycle encoding needs n >= 5");
    std::vector<int> v(n);
    std::vector<char> seen(n + 2, 0);
    int over = -1;
    for (int i = 1; i <= n; ++i) {
        int x = i == 1 ? 2 : (i % 2 == 0 ? i + 2 : i - 2);
        if (x > n) {
            over = i;
            continue;
        }
        v[i - 1] = x;
        seen[x] = 1;
    }
    for (int x = 1; x <= n; ++x)
        if (!seen[x]) v[over - 1] = x;
    PermLettering l;
    l.k = 2;
    l.host = Permutation(v);
    // Leaves of the path G_host get letter 2 (b), the rest letter 1 (a).
    for (int i = 1; i <= n; ++i) {
        int deg = 0;
        for (int j = 1; j <= n; ++j)
            if (j != i && ((i < j) == (v[i - 1] > v[j - 1]))) ++deg;
        l.word.push_back(deg == 1 ? 2 : 1);
    }
    l.I = {{1, 1}, {1, 2}, {2, 1}};
    l.N = {{2, 2}};
    return l;
}

CountingBoundReport counting_bound_report(int n, double alpha) {
    if (n < 1 || alpha <= 0 || alpha >= 1) throw DomainError("need n >= 1 and 0 < alpha < 1");
    CountingBoundReport r;
    r.n = n;
    r.alpha = alpha;
    r.k = static_cast<int>(std::floor(alpha * n));
    r.log2_graphs = n * (n - 1) / 2.0;
    const double log2_fact = std::lgamma(n + 1.0) / std::log(2.0);
    const double k = r.k;
    r.log2_encodings = 2 * log2_fact + (k > 0 ? n * std::log2(k) : -INFINITY) + 2 * k * k;
    const double an = alpha * n;
    r.log2_crude = 2.0 * n * std::log2(n) + n * std::log2(an) + 2 * an * an;
    r.bound_holds = r.log2_encodings < r.log2_graphs;
    return r;
}

}  // namespace invg
