#include "invg/letters.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "invg/errors.hpp"

namespace invg {

Graph decode(const Lettering& l) {
    const int n = static_cast<int>(l.word.size());
    for (int a : l.word)
        if (a < 1 || a > l.k) throw DomainError("word letter outside 1..k");
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (l.decoder.count({l.word[i - 1], l.word[j - 1]})) g.add_edge(i, j);
    return g;
}

bool encodes(const Graph& g, const Encoding& e) {
    const auto& w = e.lettering.word;
    if (w.size() != e.order.size()) return false;
    const int n = static_cast<int>(w.size());
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (g.adjacent(e.order[s], e.order[t]) != (e.lettering.decoder.count({w[s], w[t]}) > 0)) return false;
    return true;
}

int cochromatic_number(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    caps::require("cochromatic_number", n, 12, 16);
    const std::uint32_t full = (1u << n) - 1;
    std::vector<char> homogeneous(full + 1, 0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        bool clique = true, indep = true;
        for (int a = 0; a < n && (clique || indep); ++a) {
            if (!((m >> a) & 1u)) continue;
            const auto nb = static_cast<std::uint32_t>(g.row(a + 1)) & m & ~(1u << a);
            const auto others = m & ~(1u << a);
            if (nb != others) clique = false;
            if (nb != 0) indep = false;
        }
        homogeneous[m] = clique || indep;
    }
    std::vector<int> best(full + 1, n + 1);
    best[0] = 0;
    for (std::uint32_t m = 1; m <= full; ++m) {
        const std::uint32_t low = m & (~m + 1);
        const std::uint32_t rest = m & ~low;
        // Part containing the lowest vertex: low plus any subset of the rest.
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t part = sub | low;
            if (homogeneous[part]) best[m] = std::min(best[m], best[m & ~part] + 1);
            if (sub == 0) break;
        }
    }
    return best[full];
}

namespace {

// Joint search over vertex order and letter assignment; decoder entries are
// inferred lazily (unknown / in / out) and the first contradiction prunes.
struct LetterSearch {
    const Graph& g;
    int n;
    int k;
    std::vector<signed char> dec{};  // k*k, -1 unknown
    std::vector<int> word{}, order{};
    std::uint64_t used = 0;
    int letters_used = 0;
    bool have = false;
    std::vector<int> best_word{}, best_order{};
    std::vector<signed char> best_dec{};

    // Smallest possible suffix from position t given the letters used so far.
    bool best_suffix_is_minimal(int t) const {
        const int need = k - letters_used;
        const int r = n - t;
        for (int i = 0; i < r; ++i) {
            const int expect = i < r - need ? 0 : letters_used + (i - (r - need));
            if (best_word[t + i] != expect) return false;
        }
        return true;
    }

    void run(int t) {
        if (t == n) {
            if (!have || word < best_word) {
                have = true;
                best_word = word;
                best_order = order;
                best_dec = dec;
            }
            return;
        }
        int cmp = 0;
        if (have) {
            for (int i = 0; i < t && cmp == 0; ++i)
                cmp = word[i] < best_word[i] ? -1 : (word[i] > best_word[i] ? 1 : 0);
            if (cmp > 0) return;
            if (cmp == 0 && best_suffix_is_minimal(t)) return;
        }
        const int top = std::min(letters_used, k - 1);
        for (int a = 0; a <= top; ++a) {
            if (have && cmp == 0 && a > best_word[t]) break;
            const int lu = letters_used + (a == letters_used ? 1 : 0);
            if (lu + (n - t - 1) < k) continue;
            for (int v = 1; v <= n; ++v) {
                if ((used >> (v - 1)) & 1u) continue;
                std::vector<int> changed;
                bool ok = true;
                const std::uint64_t row = g.row(v);
                for (int s = 0; s < t; ++s) {
                    const int idx = word[s] * k + a;
                    const signed char need = ((row >> (order[s] - 1)) & 1u) ? 1 : 0;
                    if (dec[idx] < 0) {
                        dec[idx] = need;
                        changed.push_back(idx);
                    } else if (dec[idx] != need) {
                        ok = false;
                        break;
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
                for (int idx : changed) dec[idx] = -1;
                // A better word may have appeared; re-check the bound.
                if (have) {
                    int c2 = 0;
                    for (int i = 0; i < t && c2 == 0; ++i)
                        c2 = word[i] < best_word[i] ? -1 : (word[i] > best_word[i] ? 1 : 0);
                    if (c2 > 0 || (c2 == 0 && a > best_word[t])) return;
                }
            }
        }
    }
};

}  // namespace

std::optional<LettericityResult> lettericity_exact(const Graph& g, int k_max) {
    caps::require("lettericity_exact", g.n(), 7, 8);
    if (k_max > 5) caps::require("lettericity_exact k_max", k_max, 5, 8);
    const int n = g.n();
    if (n == 0) return LettericityResult{0, {}};
    for (int k = std::max(1, cochromatic_number(g)); k <= k_max; ++k) {
        LetterSearch s{g, n, k};
        s.dec.assign(static_cast<std::size_t>(k * k), -1);
        s.word.assign(n, 0);
        s.order.assign(n, 0);
        s.run(0);
        if (!s.have) continue;
        LettericityResult r;
        r.k = k;
        r.witness.order = s.best_order;
        r.witness.lettering.k = k;
        for (int a : s.best_word) r.witness.lettering.word.push_back(a + 1);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (s.best_dec[a * k + b] == 1) r.witness.lettering.decoder.insert({a + 1, b + 1});
        if (!encodes(g, r.witness)) throw DomainError("lettericity witness failed to decode");
        return r;
    }
    return std::nullopt;
}

bool is_crossing_nested_shape(const std::vector<int>& word) {
    if (word.size() % 2) return false;
    const int k = static_cast<int>(word.size() / 2);
    std::vector<int> second(word.begin() + k, word.end());
    for (int i = 0; i < k; ++i)
        if (word[i] != i + 1) return false;
    std::sort(second.begin(), second.end());
    for (int i = 0; i < k; ++i)
        if (second[i] != i + 1) return false;
    return true;
}

namespace {

// Renumber letters by first occurrence, carrying the decoder along.
void normalize_letters(Lettering& l) {
    std::map<int, int> rename;
    for (int a : l.word)
        if (!rename.count(a)) rename.emplace(a, static_cast<int>(rename.size()) + 1);
    for (int& a : l.word) a = rename.at(a);
    LetterPairs d;
    for (auto [a, b] : l.decoder)
        if (rename.count(a) && rename.count(b)) d.insert({rename.at(a), rename.at(b)});
    l.decoder = std::move(d);
    l.k = static_cast<int>(rename.size());
}

// Decoder read off g for the given word and order; throws on contradiction.
LetterPairs read_off_decoder(const Graph& g, const std::vector<int>& word, const std::vector<int>& order) {
    std::map<std::pair<int, int>, bool> seen;
    LetterPairs d;
    for (std::size_t s = 0; s < word.size(); ++s)
        for (std::size_t t = s + 1; t < word.size(); ++t) {
            const std::pair<int, int> key{word[s], word[t]};
            const bool adj = g.adjacent(order[s], order[t]);
            auto [it, fresh] = seen.emplace(key, adj);
            if (!fresh && it->second != adj) throw DomainError("no decoder realises this arrangement");
            if (adj) d.insert(key);
        }
    return d;
}

}  // namespace

Encoding extend_lettering(const Graph& g, const Encoding& inner) {
    const auto& w = inner.lettering.word;
    if (!is_crossing_nested_shape(w)) throw DomainError("inner word is not of the form l1..lk l_pi(1)..l_pi(k)");
    if (!encodes(g, inner)) throw DomainError("inner lettering does not encode G[H]");
    const int n = g.n();
    const int k = static_cast<int>(w.size() / 2);
    std::uint64_t in_h = 0;
    for (int v : inner.order) in_h |= std::uint64_t{1} << (v - 1);
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (!((in_h >> (v - 1)) & 1u)) rest.push_back(v);

    Encoding out;
    out.lettering.k = k + static_cast<int>(rest.size());
    out.lettering.decoder = inner.lettering.decoder;
    for (int i = 0; i < k; ++i) {
        out.lettering.word.push_back(w[i]);
        out.order.push_back(inner.order[i]);
    }
    for (std::size_t j = 0; j < rest.size(); ++j) {
        out.lettering.word.push_back(k + 1 + static_cast<int>(j));
        out.order.push_back(rest[j]);
    }
    for (int i = k; i < 2 * k; ++i) {
        out.lettering.word.push_back(w[i]);
        out.order.push_back(inner.order[i]);
    }
    // D2 among the fresh letters, Dx from first-half letters, Dy into
    // second-half letters.
    for (std::size_t a = 0; a < rest.size(); ++a) {
        const int la = k + 1 + static_cast<int>(a);
        for (std::size_t b = a + 1; b < rest.size(); ++b)
            if (g.adjacent(rest[a], rest[b])) out.lettering.decoder.insert({la, k + 1 + static_cast<int>(b)});
        for (int i = 0; i < k; ++i) {
            if (g.adjacent(inner.order[i], rest[a])) out.lettering.decoder.insert({w[i], la});
            if (g.adjacent(rest[a], inner.order[k + i])) out.lettering.decoder.insert({la, w[k + i]});
        }
    }
    if (!encodes(g, out)) throw DomainError("extended lettering failed to decode");
    return out;
}

PalindromicResult palindromic_savings(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw DomainError("palindromic_savings needs n >= 2");
    // order = x_1..x_k y_k..y_1; x_i and y_i carry letter i.
    std::vector<int> firsts{1}, seconds{2};
    LetterPairs dec;
    if (g.adjacent(1, 2)) dec.insert({1, 1});
    auto bound_admits = [&](int h) {
        const int outside = n - h;
        return h < 62 && static_cast<double>(outside) >= std::ldexp(1.0, h) + 1;
    };
    while (bound_admits(2 * static_cast<int>(firsts.size()))) {
        std::uint64_t hmask = 0;
        for (int v : firsts) hmask |= std::uint64_t{1} << (v - 1);
        for (int v : seconds) hmask |= std::uint64_t{1} << (v - 1);
        int pu = 0, pv = 0;
        for (int u = 1; u <= n && !pu; ++u) {
            if ((hmask >> (u - 1)) & 1u) continue;
            for (int v = u + 1; v <= n; ++v) {
                if ((hmask >> (v - 1)) & 1u) continue;
                if ((g.row(u) & hmask) == (g.row(v) & hmask)) {
                    pu = u;
                    pv = v;
                    break;
                }
            }
        }
        if (!pu) break;
        const int k = static_cast<int>(firsts.size());
        const int fresh = k + 1;
        for (int i = 0; i < k; ++i) {
            if (g.adjacent(firsts[i], pu)) dec.insert({i + 1, fresh});
            if (g.adjacent(pu, seconds[i])) dec.insert({fresh, i + 1});
        }
        if (g.adjacent(pu, pv)) dec.insert({fresh, fresh});
        firsts.push_back(pu);
        seconds.push_back(pv);
    }
    PalindromicResult r;
    r.k = static_cast<int>(firsts.size());
    r.inner.lettering.k = r.k;
    r.inner.lettering.decoder = dec;
    for (int i = 0; i < r.k; ++i) {
        r.inner.lettering.word.push_back(i + 1);
        r.inner.order.push_back(firsts[i]);
    }
    for (int i = r.k - 1; i >= 0; --i) {
        r.inner.lettering.word.push_back(i + 1);
        r.inner.order.push_back(seconds[i]);
    }
    if (!encodes(g, r.inner)) throw DomainError("palindromic lettering failed to decode");
    r.full = extend_lettering(g, r.inner);
    return r;
}

Encoding encode_chain(const Graph& g, const Chain& chain) {
    if (chain.size() < 2 || chain.size() % 2) throw DomainError("chain must have positive even length");
    if (!is_chain(g, chain)) throw DomainError("vertex sequence is not a chain");
    std::vector<int> order{chain[0], chain[1]};
    std::vector<int> word{1, 1};
    for (std::size_t k = 1; 2 * k < chain.size(); ++k) {
        const int last = chain[2 * k - 1];
        const int a = chain[2 * k], b = chain[2 * k + 1];
        if (order.back() != last) {
            if (order.front() != last) throw DomainError("chain invariant lost during encoding");
            std::reverse(order.begin(), order.end());
            std::reverse(word.begin(), word.end());
        }
        const int fresh = static_cast<int>(k) + 1;
        const bool a_pendant = g.adjacent(a, last);
        const bool b_pendant = g.adjacent(b, a);
        if (a_pendant == b_pendant) {
            order.insert(order.begin() + static_cast<long>(k), a);
            word.insert(word.begin() + static_cast<long>(k), fresh);
            order.push_back(b);
            word.push_back(fresh);
        } else {
            order.insert(order.end() - 1, a);
            word.insert(word.end() - 1, fresh);
            order.insert(order.begin(), b);
            word.insert(word.begin(), fresh);
        }
        Lettering tmp{fresh, word, {}};
        normalize_letters(tmp);
        word = tmp.word;
    }
    Encoding e;
    e.order = order;
    e.lettering.word = word;
    e.lettering.k = static_cast<int>(word.size() / 2);
    e.lettering.decoder = read_off_decoder(g, word, order);
    if (!is_crossing_nested_shape(word) || !encodes(g, e)) throw DomainError("chain encoding failed to decode");
    return e;
}

Encoding nest_encodings(const Graph& g, const Encoding& outer, const Encoding& inner) {
    const auto& wo = outer.lettering.word;
    const auto& wi = inner.lettering.word;
    if (!is_crossing_nested_shape(wo) || !is_crossing_nested_shape(wi))
        throw DomainError("both words must have the form l1..lk l_pi(1)..l_pi(k)");
    const int s = static_cast<int>(wo.size() / 2);
    std::vector<int> word, order;
    for (int i = 0; i < s; ++i) {
        word.push_back(wo[i]);
        order.push_back(outer.order[i]);
    }
    for (std::size_t i = 0; i < wi.size(); ++i) {
        word.push_back(wi[i] + s);
        order.push_back(inner.order[i]);
    }
    for (int i = s; i < 2 * s; ++i) {
        word.push_back(wo[i]);
        order.push_back(outer.order[i]);
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("encodings must use disjoint vertex sets");
    Encoding e;
    e.order = order;
    e.lettering.word = word;
    e.lettering.k = s + static_cast<int>(wi.size() / 2);
    e.lettering.decoder = read_off_decoder(g, word, order);
    if (!encodes(g, e)) throw DomainError("nested encoding failed to decode");
    return e;
}

Graph random_graph(int n, std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() >> 63) g.add_edge(u, v);
    return g;
}

LettericityTrial random_lettericity_trial(int n, int samples, std::uint64_t seed) {
    caps::require("random_lettericity_trial", n, 7, 8);
    if (n < 1 || samples < 1) throw DomainError("need n >= 1 and samples >= 1");
    LettericityTrial t;
    t.n = n;
    t.samples = samples;
    t.seed = seed;
    long long total = 0;
    for (int i = 0; i < samples; ++i) {
        const Graph g = random_graph(n, seed, static_cast<std::uint64_t>(i));
        auto r = lettericity_exact(g, 5);
        const int k = r ? r->k : -1;
        ++t.histogram[k];
        total += k;
    }
    t.mean = static_cast<double>(total) / samples;
    const double l2 = std::log2(static_cast<double>(n));
    t.reference_n_minus_2log = n - 2 * l2;
    t.reference_full = n > 1 ? n - (2 * l2 + 2 * std::log2(l2)) : 0.0;
    return t;
}

}  // namespace invg
