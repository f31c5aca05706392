#include "invg/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "invg/errors.hpp"

namespace invg {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > n || seen[x]) throw DomainError("not a permutation of 1..n");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::reverse_identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> v;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw ParseError("empty permutation text");
    // Commas, or failing that blanks, separate multi-digit entries.
    const char sep = text.find(',') != std::string_view::npos ? ',' : ' ';
    if (sep == ',' || text.find_first_of(" \t") != std::string_view::npos) {
        std::string spaced(text);
        if (sep == ' ') {
            std::replace(spaced.begin(), spaced.end(), '\t', ' ');
            spaced.erase(std::unique(spaced.begin(), spaced.end(), [](char a, char b) { return a == ' ' && b == ' '; }),
                         spaced.end());
        }
        const std::string_view body = spaced;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t next = body.find(sep, pos);
            if (next == std::string_view::npos) next = body.size();
            auto tok = trim(body.substr(pos, next - pos));
            int x = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
            if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError("bad permutation entry '" + std::string(tok) + "'");
            v.push_back(x);
            pos = next + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw ParseError(std::string("bad permutation digit '") + ch + "'");
            v.push_back(ch - '0');
        }
    }
    try {
        return Permutation(std::move(v));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

int Permutation::index_of(int x) const {
    auto it = std::find(v_.begin(), v_.end(), x);
    if (it == v_.end()) throw DomainError("value not present");
    return static_cast<int>(it - v_.begin()) + 1;
}

std::string Permutation::str() const {
    std::string out;
    if (size() <= 9) {
        for (int x : v_) out.push_back(static_cast<char>('0' + x));
        return out;
    }
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v_[i]);
    }
    return out;
}

LehmerCode lehmer_encode(const Permutation& p) {
    const int n = p.size();
    LehmerCode c(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++c[i - 1];
    return c;
}

Permutation lehmer_decode(const LehmerCode& c) {
    const int n = static_cast<int>(c.size());
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<int> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (c[i] < 0 || c[i] > n - 1 - i)
            throw DomainError("Lehmer entry c" + std::to_string(i + 1) + " out of range");
        v.push_back(remaining[c[i]]);
        remaining.erase(remaining.begin() + c[i]);
    }
    return Permutation(std::move(v));
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t lehmer_rank(const Permutation& p) {
    auto c = lehmer_encode(p);
    const int n = p.size();
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(c[i]);
    return r;
}

Permutation lehmer_unrank(int n, std::uint64_t rank) {
    LehmerCode c(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(n - i);
        c[i] = static_cast<int>(rank % base);
        rank /= base;
    }
    if (rank != 0) throw DomainError("rank out of range");
    return lehmer_decode(c);
}

std::vector<std::pair<int, int>> inversion_list(const Permutation& p) {
    std::vector<std::pair<int, int>> out;
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) out.emplace_back(i, j);
    return out;
}

int length(const Permutation& p) {
    int count = 0;
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++count;
    return count;
}

std::vector<std::uint64_t> inversion_polynomial(int n) {
    if (n < 1) throw DomainError("inversion_polynomial needs n >= 1");
    caps::require("inversion_polynomial", n, 12, 20);
    std::vector<std::uint64_t> coef{1};
    for (int j = 1; j <= n; ++j) {
        std::vector<std::uint64_t> next(coef.size() + static_cast<std::size_t>(j - 1), 0);
        for (std::size_t a = 0; a < coef.size(); ++a)
            for (int b = 0; b < j; ++b) next[a + static_cast<std::size_t>(b)] += coef[a];
        coef = std::move(next);
    }
    return coef;
}

Permutation inverse(const Permutation& p) {
    std::vector<int> v(p.size());
    for (int i = 1; i <= p.size(); ++i) v[p(i) - 1] = i;
    return Permutation(std::move(v));
}

Permutation symmetry(const Permutation& p, Symmetry which) {
    const int n = p.size();
    std::vector<int> v(n);
    switch (which) {
        case Symmetry::inverse:
            return inverse(p);
        case Symmetry::reverse:
            for (int i = 1; i <= n; ++i) v[i - 1] = p(n + 1 - i);
            break;
        case Symmetry::complement:
            for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - p(i);
            break;
        case Symmetry::reverse_complement:
            for (int i = 1; i <= n; ++i) v[i - 1] = n + 1 - p(n + 1 - i);
            break;
    }
    return Permutation(std::move(v));
}

Permutation sum(const Permutation& p, const Permutation& q, SumKind kind) {
    const int m = p.size(), k = q.size();
    std::vector<int> v;
    v.reserve(m + k);
    if (kind == SumKind::direct) {
        for (int i = 1; i <= m; ++i) v.push_back(p(i));
        for (int i = 1; i <= k; ++i) v.push_back(q(i) + m);
    } else {
        for (int i = 1; i <= m; ++i) v.push_back(p(i) + k);
        for (int i = 1; i <= k; ++i) v.push_back(q(i));
    }
    return Permutation(std::move(v));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw DomainError("compose: size mismatch");
    std::vector<int> v(p.size());
    for (int i = 1; i <= p.size(); ++i) v[i - 1] = p(q(i));
    return Permutation(std::move(v));
}

namespace {

bool match_from(const Permutation& p, const Permutation& pat, int next_index,
                std::vector<int>& chosen) {
    const int k = static_cast<int>(chosen.size());
    if (k == pat.size()) return true;
    const int remaining = pat.size() - k;
    for (int i = next_index; i <= p.size() - remaining + 1; ++i) {
        bool ok = true;
        for (int j = 0; j < k && ok; ++j)
            ok = (p(chosen[j]) < p(i)) == (pat(j + 1) < pat(k + 1));
        if (!ok) continue;
        chosen.push_back(i);
        if (match_from(p, pat, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<PatternMatch> contains_pattern(const Permutation& p, const Permutation& pat) {
    if (pat.size() > p.size()) return std::nullopt;
    std::vector<int> chosen;
    if (!match_from(p, pat, 1, chosen)) return std::nullopt;
    PatternMatch m;
    m.indices = chosen;
    for (int i : chosen) m.values.push_back(p(i));
    return m;
}

DescentProfile descent_profile(const Permutation& p) {
    DescentProfile d;
    const int n = p.size();
    std::vector<char> des(n + 1, 0);
    for (int i = 1; i < n; ++i)
        if (p(i) > p(i + 1)) {
            des[i] = 1;
            d.descent_set.push_back(i);
        }
    d.x_d = static_cast<int>(d.descent_set.size());
    for (int i = 1; i + 3 <= n; ++i)
        if (des[i] && des[i + 1] && des[i + 2]) ++d.x_ddd;
    for (int i = 1; i + 5 <= n; ++i)
        if (des[i] && des[i + 1] && !des[i + 2] && des[i + 3] && des[i + 4]) ++d.x_ddadd;
    return d;
}

std::string descent_segmentation(const Permutation& p) {
    const bool wide = p.size() > 9;
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) {
            if (p(i - 1) > p(i)) out.push_back('|');
            else if (wide) out.push_back(',');
        }
        out += std::to_string(p(i));
    }
    return out;
}

std::vector<int> cycle_lengths(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(n + 1, 0);
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

int absolute_length(const Permutation& p) {
    return p.size() - static_cast<int>(cycle_lengths(p).size());
}

std::optional<Interval> find_interval(const Permutation& p) {
    const int n = p.size();
    for (int len = 2; len < n; ++len) {
        for (int a = 1; a + len - 1 <= n; ++a) {
            int lo = p(a), hi = p(a);
            for (int i = a + 1; i < a + len; ++i) {
                lo = std::min(lo, p(i));
                hi = std::max(hi, p(i));
            }
            if (hi - lo == len - 1) return Interval{a, a + len - 1, lo, hi};
        }
    }
    return std::nullopt;
}

bool is_simple(const Permutation& p) { return !find_interval(p).has_value(); }

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

}  // namespace invg
