#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ipr/matrix.hpp"

namespace ipr {

struct Pivot {
    std::size_t row;
    std::size_t col;
    friend bool operator==(const Pivot&, const Pivot&) = default;
};

struct RrefResult {
    ExactMatrix reduced;
    std::vector<Pivot> pivots; // ascending row order
};

/// Gauss-Jordan elimination; labels of the input are kept on the result.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Greedy row basis of a matrix: rows are scanned top to bottom and a row
/// joins `basis` iff it is independent of the rows already there.
///
/// `coefficients[k]` expresses row `dependent[k]` over `basis`:
///   row(dependent[k]) == sum_i coefficients[k][i] * row(basis[i]).
struct DependenceResult {
    std::vector<std::size_t> basis;
    std::vector<std::size_t> dependent;
    std::vector<std::vector<Rational>> coefficients;
};

DependenceResult row_basis(const ExactMatrix& m);

/// The dependence matrix B(A): one row per dependent row j of A, columns
/// ordered as the basis rows then the dependent rows. Entry (j, i) is the
/// coefficient of basis row i in row j, entry (j, j) is -1, and the other
/// dependent-row entries are 0. A matrix with independent rows yields the
/// 0 x rows(A) matrix.
ExactMatrix dependence_matrix(const ExactMatrix& m);

/// True iff the column spaces of `a` and `b` coincide over the rationals.
/// Throws std::invalid_argument if the row counts differ.
bool column_space_equal(const ExactMatrix& a, const ExactMatrix& b);

/// Some lambda with sum_k lambda[k] * columns[k] == target, free variables
/// set to zero; nullopt if target is outside the span. An empty column set
/// spans only the zero vector.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                                   std::span<const Rational> target);

/// m * x for a column vector x.
std::vector<Rational> multiply(const ExactMatrix& m, std::span<const Rational> x);

} // namespace ipr
