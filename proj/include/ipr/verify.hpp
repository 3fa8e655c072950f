#pragma once

#include <cstdint>
#include <vector>

#include "ipr/search.hpp"
#include "ipr/systems.hpp"

namespace ipr {

/// Per-stage facts behind the obstruction: with y = n and every x_nj a
/// positive multiple of 2^n, the n-th expression lies in the class
/// 2^(n-1) mod 2^n, whose generic colour is the opposite of n's colour.
struct ObstructionEntry {
    std::uint64_t n = 0;
    BigInt coefficient;
    bool congruence_holds = false;     // c_n n == 2^(n-1) (mod 2^n)
    bool class_opposite = false;       // class colour != colour of n
    BigInt min_expression_value;       // n 2^n + c_n n
    bool exception_cleared = false;    // stages 1, 2: min value exceeds the red member n
    bool passed() const { return congruence_holds && class_opposite && exception_cleared; }
    friend bool operator==(const ObstructionEntry&, const ObstructionEntry&) = default;
};

struct ObstructionReport {
    std::vector<ObstructionEntry> entries; // n = 1..N
    bool passed() const;
    /// First failing n, or 0 when every entry passes.
    std::uint64_t first_failure() const;
    friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// Checks stages 1..range_limit with the canonical coefficients.
ObstructionReport verify_obstruction(std::uint64_t range_limit);
/// Checks stages 1..coeffs.size() with caller-supplied coefficients.
ObstructionReport verify_obstruction(const CoefficientSequence& coeffs);

/// Entrywise equality of the dependence matrices (labels ignored).
bool dependence_matrices_equal(const SystemInstance& first, const SystemInstance& second);
/// Builds both systems at depth d with canonical coefficients and compares B(A).
bool verify_B_equality(std::size_t depth);
bool verify_image_equality_over_Q(std::size_t depth);

/// The 3x2 matrix with image (x, y, x + y).
ExactMatrix schur_matrix();

struct SchurOptions {
    std::uint64_t enumeration_limit = std::uint64_t{1} << 24;
    int workers = 1;
};

/// True iff every k-colouring of [1..N] has x, y with x, y, x + y in [1..N]
/// and monochromatic. Throws std::invalid_argument if k^N exceeds the limit
/// or N, k < 1.
bool schur_exhaustive(std::uint64_t n, std::uint64_t k, const SchurOptions& options = {});

} // namespace ipr
