#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ipr/matrix.hpp"
#include "ipr/rational.hpp"

namespace ipr {

/// Inverse of an odd `a` modulo `modulus` = 2^m (m >= 1), in [1, modulus).
/// Throws std::invalid_argument if `a` is even or non-positive, or if
/// `modulus` is not a power of two at least 2.
BigInt modular_inverse(const BigInt& a, const BigInt& modulus);

/// Least positive c with c * n == 2^(n-1) (mod 2^n). Throws for n < 1.
BigInt solve_coefficient(unsigned long n);

/// Coefficients c_1..c_d of the expression rows.
///
/// Any integers are accepted here; `canonical` produces the least positive
/// solutions of the congruences and `satisfies_congruences` checks them.
struct CoefficientSequence {
    std::vector<BigInt> values;

    static CoefficientSequence canonical(std::size_t depth);
    bool satisfies_congruences() const;
    std::size_t size() const { return values.size(); }
    friend bool operator==(const CoefficientSequence&, const CoefficientSequence&) = default;
};

enum class SystemKind {
    PlainX,  // variables x_ij, y
    ScaledZ, // x_ij = 2^i z_ij
};

std::string_view to_string(SystemKind kind);
/// Accepts `1`, `plain`, `x` and `2`, `scaled`, `z`.
SystemKind parse_system_kind(std::string_view text);

/// Depth-d truncation of the counterexample system.
///
/// Rows: expressions E_1..E_d, then one row per variable in label order, then
/// y. Columns: x_i_j (or z_i_j) for 1 <= j <= i <= d row by row, then y.
struct SystemInstance {
    SystemKind kind = SystemKind::PlainX;
    std::size_t depth = 0;
    CoefficientSequence coefficients;
    ExactMatrix matrix;
    std::vector<std::string> variable_labels;
    std::vector<BigInt> divisibility; // one modulus per variable

    std::size_t variable_count() const { return variable_labels.size(); }
};

/// Throws std::invalid_argument if depth < 1 or coeffs has fewer than depth values.
SystemInstance build_system(SystemKind kind, std::size_t depth, const CoefficientSequence& coeffs);

/// Substitutes x_ij = 2^i z_ij. Throws std::invalid_argument unless kind is PlainX.
SystemInstance scale_to_second(const SystemInstance& system);

/// Row index i of each x/z variable column (0 for y).
std::vector<std::size_t> variable_levels(std::size_t depth);

std::string variable_label(SystemKind kind, std::size_t i, std::size_t j);

} // namespace ipr
