#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "invg/letters.hpp"
#include "invg/permutation.hpp"

namespace invg {

using Rational = boost::rational<long long>;

// s x t matrix over {-1, 0, 1}, addressed as (column, row), both 1-based,
// row 1 at the bottom.
struct GridMatrix {
    int cols = 0;
    int rows = 0;
    std::vector<int> cells;  // column-major: (c, r) at (c-1) * rows + (r-1)

    GridMatrix() = default;
    GridMatrix(int cols, int rows);
    // Rows as printed, top row first.
    static GridMatrix from_display(const std::vector<std::vector<int>>& printed);

    int at(int c, int r) const { return cells[static_cast<std::size_t>((c - 1) * rows + (r - 1))]; }
    void set(int c, int r, int value);
    int nonzero_count() const;
    bool operator==(const GridMatrix&) const = default;
};

// Throws DomainError unless entries are in {-1,0,1} and one is nonzero.
void check_matrix(const GridMatrix& m);

struct Signs {
    std::vector<int> col;  // c_1..c_s
    std::vector<int> row;  // r_1..r_t
    bool operator==(const Signs&) const = default;
};

struct Expansion {
    GridMatrix matrix;
    Signs signs;  // c_k = (-1)^k, r_l = (-1)^l
};
Expansion expand_to_pmm(const GridMatrix& m);

// Signs with M(i,j) = c_i r_j on nonzero entries. In each connected
// component of the column/row incidence structure the smallest column gets
// +1; unused lines get +1.
std::optional<Signs> is_pmm(const GridMatrix& m);

struct GridDrawing {
    GridMatrix matrix;
    Signs signs;
    Permutation host;
    std::vector<std::pair<int, int>> cell_of;  // cell of the entry at index i (cell_of[i-1])
    std::vector<int> reading_order;            // tau, as values
};

bool validate_drawing(const GridDrawing& d);

struct GridLettering {
    Lettering lettering;
    std::vector<std::pair<int, int>> letter_cells;  // letter a -> cell letter_cells[a-1]
    std::vector<int> order;                         // vertex (value) at each position, i.e. tau
};
// Letters are the nonzero cells in column-major order.
GridLettering drawing_to_lettering(const GridDrawing& d);

// One-row drawing pairing consecutive entries into ceil(n/2) cells.
GridDrawing monotone_run_drawing(const Permutation& p);
// One-row drawing with one cell per block of a minimum monotone-run split.
GridDrawing min_run_drawing(const Permutation& p);

// Fewest contiguous monotone blocks (X_r).
int min_monotone_runs(const Permutation& p);

struct DescentExpectations {
    int n = 0;
    Rational x_d, x_ddd, x_ddadd;
    Rational bound;  // 311n/720 + 109/144
    bool formulas_valid = false;  // n >= 6
};
DescentExpectations descent_expectations(int n);

struct DescentMeans {
    int n = 0;
    Rational x_d, x_ddd, x_ddadd, x_r;
};
// Exact means over all of S_n (n <= 8).
DescentMeans exhaustive_descent_means(int n);

}  // namespace invg
