#include "invg/grid.hpp"

#include <algorithm>
#include <numeric>

#include "invg/errors.hpp"

namespace invg {

GridMatrix::GridMatrix(int c, int r) : cols(c), rows(r), cells(static_cast<std::size_t>(c * r), 0) {
    if (c < 1 || r < 1) throw DomainError("grid matrix needs at least one row and column");
}

GridMatrix GridMatrix::from_display(const std::vector<std::vector<int>>& printed) {
    if (printed.empty() || printed[0].empty()) throw DomainError("empty matrix");
    const int t = static_cast<int>(printed.size());
    const int s = static_cast<int>(printed[0].size());
    GridMatrix m(s, t);
    for (int i = 0; i < t; ++i) {
        if (static_cast<int>(printed[i].size()) != s) throw DomainError("ragged matrix");
        for (int c = 1; c <= s; ++c) m.set(c, t - i, printed[i][c - 1]);
    }
    return m;
}

void GridMatrix::set(int c, int r, int value) {
    if (c < 1 || c > cols || r < 1 || r > rows) throw DomainError("cell outside the matrix");
    if (value < -1 || value > 1) throw DomainError("matrix entries must be -1, 0 or 1");
    cells[static_cast<std::size_t>((c - 1) * rows + (r - 1))] = value;
}

int GridMatrix::nonzero_count() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](int x) { return x != 0; }));
}

void check_matrix(const GridMatrix& m) {
    if (m.cols < 1 || m.rows < 1 || static_cast<int>(m.cells.size()) != m.cols * m.rows)
        throw DomainError("malformed matrix dimensions");
    for (int x : m.cells)
        if (x < -1 || x > 1) throw DomainError("matrix entries must be -1, 0 or 1");
    if (m.nonzero_count() == 0) throw DomainError("matrix has no nonzero entry");
}

Expansion expand_to_pmm(const GridMatrix& m) {
    check_matrix(m);
    Expansion e{GridMatrix(2 * m.cols, 2 * m.rows), {}};
    for (int i = 1; i <= m.cols; ++i)
        for (int j = 1; j <= m.rows; ++j) {
            if (m.at(i, j) == 1) {
                e.matrix.set(2 * i - 1, 2 * j - 1, 1);
                e.matrix.set(2 * i, 2 * j, 1);
            } else if (m.at(i, j) == -1) {
                e.matrix.set(2 * i - 1, 2 * j, -1);
                e.matrix.set(2 * i, 2 * j - 1, -1);
            }
        }
    for (int k = 1; k <= 2 * m.cols; ++k) e.signs.col.push_back(k % 2 ? -1 : 1);
    for (int l = 1; l <= 2 * m.rows; ++l) e.signs.row.push_back(l % 2 ? -1 : 1);
    return e;
}

std::optional<Signs> is_pmm(const GridMatrix& m) {
    check_matrix(m);
    // Lines 0..s-1 are columns, s..s+t-1 rows; nonzero cells join them.
    const int s = m.cols, t = m.rows;
    std::vector<int> sign(static_cast<std::size_t>(s + t), 0);
    for (int start = 0; start < s + t; ++start) {
        if (sign[start]) continue;
        sign[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            const int lo = x < s ? s : 0, hi = x < s ? s + t : s;
            for (int y = lo; y < hi; ++y) {
                const int c = x < s ? x + 1 : y + 1;
                const int r = x < s ? y - s + 1 : x - s + 1;
                const int entry = m.at(c, r);
                if (!entry) continue;
                const int want = entry * sign[x];
                if (!sign[y]) {
                    sign[y] = want;
                    stack.push_back(y);
                } else if (sign[y] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    Signs out;
    out.col.assign(sign.begin(), sign.begin() + s);
    out.row.assign(sign.begin() + s, sign.end());
    return out;
}

namespace {

bool signs_fit(const GridMatrix& m, const Signs& sg) {
    if (static_cast<int>(sg.col.size()) != m.cols || static_cast<int>(sg.row.size()) != m.rows) return false;
    for (int c : sg.col)
        if (c != 1 && c != -1) return false;
    for (int r : sg.row)
        if (r != 1 && r != -1) return false;
    for (int c = 1; c <= m.cols; ++c)
        for (int r = 1; r <= m.rows; ++r)
            if (m.at(c, r) && m.at(c, r) != sg.col[c - 1] * sg.row[r - 1]) return false;
    return true;
}

}  // namespace

bool validate_drawing(const GridDrawing& d) {
    const GridMatrix& m = d.matrix;
    try {
        check_matrix(m);
    } catch (const DomainError&) {
        return false;
    }
    if (!signs_fit(m, d.signs)) return false;
    const int n = d.host.size();
    if (static_cast<int>(d.cell_of.size()) != n || static_cast<int>(d.reading_order.size()) != n) return false;
    {
        std::vector<int> sorted = d.reading_order;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[i] != i + 1) return false;
    }
    for (auto [c, r] : d.cell_of)
        if (c < 1 || c > m.cols || r < 1 || r > m.rows || m.at(c, r) == 0) return false;

    std::vector<int> rank(n + 1);  // tau position of each value
    for (int i = 0; i < n; ++i) rank[d.reading_order[i]] = i;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto [ci, ri] = d.cell_of[i - 1];
            const auto [cj, rj] = d.cell_of[j - 1];
            const int vi = d.host(i), vj = d.host(j);
            if (ci > cj) return false;                                   // columns follow index order
            if ((vi < vj && ri > rj) || (vi > vj && ri < rj)) return false;  // rows follow value order
            if (ci == cj && ri == rj) {
                const bool increasing = vi < vj;
                if (increasing != (m.at(ci, ri) == 1)) return false;
            }
            if (ci == cj) {
                const bool earlier = rank[vi] < rank[vj];
                if (earlier != (d.signs.col[ci - 1] == 1)) return false;
            }
            if (ri == rj) {
                const bool earlier = rank[std::min(vi, vj)] < rank[std::max(vi, vj)];
                if (earlier != (d.signs.row[ri - 1] == 1)) return false;
            }
        }
    return true;
}

GridLettering drawing_to_lettering(const GridDrawing& d) {
    if (!validate_drawing(d)) throw DomainError("invalid M-drawing");
    const GridMatrix& m = d.matrix;
    GridLettering out;
    std::vector<int> letter_of(m.cells.size(), 0);
    for (int c = 1; c <= m.cols; ++c)
        for (int r = 1; r <= m.rows; ++r)
            if (m.at(c, r)) {
                out.letter_cells.push_back({c, r});
                letter_of[static_cast<std::size_t>((c - 1) * m.rows + (r - 1))] =
                    static_cast<int>(out.letter_cells.size());
            }
    auto letter = [&](int c, int r) { return letter_of[static_cast<std::size_t>((c - 1) * m.rows + (r - 1))]; };
    const int k = static_cast<int>(out.letter_cells.size());
    out.lettering.k = k;
    LetterPairs& dec = out.lettering.decoder;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) {
            const auto [ka, la] = out.letter_cells[a - 1];
            const auto [kb, lb] = out.letter_cells[b - 1];
            if (a == b) {
                if (m.at(ka, la) == -1) dec.insert({a, a});
            } else if (ka != kb && la != lb) {
                // Northwest/southeast pairs are fully inverted.
                if ((ka < kb) != (la < lb)) dec.insert({a, b});
            } else if (la == lb) {
                const bool a_left = ka < kb;
                // r = 1: right cell's letter first; r = -1: left cell's first.
                if ((d.signs.row[la - 1] == 1) != a_left) dec.insert({a, b});
            } else {
                const bool a_low = la < lb;
                if ((d.signs.col[ka - 1] == 1) != a_low) dec.insert({a, b});
            }
        }
    const Permutation inv = inverse(d.host);
    for (int v : d.reading_order) {
        const auto [c, r] = d.cell_of[inv(v) - 1];
        out.lettering.word.push_back(letter(c, r));
    }
    out.order = d.reading_order;
    return out;
}

namespace {

// One-row drawing from a split of 1..n into consecutive blocks; block signs
// given, row sign +1 so the reading order is by increasing value.
GridDrawing one_row_drawing(const Permutation& p, const std::vector<int>& block_end, const std::vector<int>& sign) {
    const int cells = static_cast<int>(block_end.size());
    GridDrawing d;
    d.matrix = GridMatrix(cells, 1);
    d.signs.row = {1};
    d.host = p;
    int start = 1;
    for (int b = 0; b < cells; ++b) {
        d.matrix.set(b + 1, 1, sign[b]);
        d.signs.col.push_back(sign[b]);
        for (int i = start; i <= block_end[b]; ++i) d.cell_of.push_back({b + 1, 1});
        start = block_end[b] + 1;
    }
    d.reading_order.resize(p.size());
    std::iota(d.reading_order.begin(), d.reading_order.end(), 1);
    return d;
}

}  // namespace

GridDrawing monotone_run_drawing(const Permutation& p) {
    const int n = p.size();
    if (n == 0) throw DomainError("empty permutation");
    std::vector<int> ends, sign;
    for (int i = 1; i <= n; i += 2) {
        if (i + 1 <= n) {
            ends.push_back(i + 1);
            sign.push_back(p(i) < p(i + 1) ? 1 : -1);
        } else {
            ends.push_back(i);
            sign.push_back(-1);
        }
    }
    return one_row_drawing(p, ends, sign);
}

namespace {

std::vector<int> run_split(const Permutation& p) {
    const int n = p.size();
    // best[i]: fewest blocks covering the first i entries.
    std::vector<int> best(n + 1, n + 1), from(n + 1, 0);
    best[0] = 0;
    for (int i = 1; i <= n; ++i) {
        bool up = true, down = true;
        for (int j = i - 1; j >= 0 && (up || down); --j) {
            // Block covers entries j+1..i.
            if (j + 1 < i) {
                up = up && p(j + 1) < p(j + 2);
                down = down && p(j + 1) > p(j + 2);
            }
            if ((up || down) && best[j] + 1 < best[i]) {
                best[i] = best[j] + 1;
                from[i] = j;
            }
        }
    }
    std::vector<int> ends;
    for (int i = n; i > 0; i = from[i]) ends.push_back(i);
    std::reverse(ends.begin(), ends.end());
    return ends;
}

}  // namespace

int min_monotone_runs(const Permutation& p) {
    if (p.size() == 0) return 0;
    return static_cast<int>(run_split(p).size());
}

GridDrawing min_run_drawing(const Permutation& p) {
    if (p.size() == 0) throw DomainError("empty permutation");
    const auto ends = run_split(p);
    std::vector<int> sign;
    int start = 1;
    for (int e : ends) {
        sign.push_back(e > start && p(start) > p(start + 1) ? -1 : 1);
        start = e + 1;
    }
    return one_row_drawing(p, ends, sign);
}

DescentExpectations descent_expectations(int n) {
    if (n < 1) throw DomainError("n must be positive");
    DescentExpectations e;
    e.n = n;
    e.x_d = Rational(n - 1, 2);
    e.x_ddd = Rational(n - 3, 24);
    e.x_ddadd = Rational(19 * (n - 5), 720);
    e.bound = Rational(311 * n, 720) + Rational(109, 144);
    e.formulas_valid = n >= 6;
    return e;
}

DescentMeans exhaustive_descent_means(int n) {
    caps::require("exhaustive_descent_means", n, 8, 9);
    if (n < 1) throw DomainError("n must be positive");
    long long d = 0, ddd = 0, ddadd = 0, r = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        const auto prof = descent_profile(p);
        d += prof.x_d;
        ddd += prof.x_ddd;
        ddadd += prof.x_ddadd;
        r += min_monotone_runs(p);
    });
    const auto total = static_cast<long long>(factorial(n));
    return {n, Rational(d, total), Rational(ddd, total), Rational(ddadd, total), Rational(r, total)};
}

}  // namespace invg
