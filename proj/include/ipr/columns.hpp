#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ipr/matrix.hpp"

namespace ipr {

/// One block of an ordered column partition. For every block after the
/// first, `combination` lists (earlier column, coefficient) pairs whose
/// weighted sum equals the sum of this block's columns. The first block has
/// an empty combination and sums to zero.
struct ColumnBlock {
    std::vector<std::size_t> columns;
    std::vector<std::pair<std::size_t, Rational>> combination;
    friend bool operator==(const ColumnBlock&, const ColumnBlock&) = default;
};

struct ColumnsCertificate {
    std::vector<ColumnBlock> blocks;
    friend bool operator==(const ColumnsCertificate&, const ColumnsCertificate&) = default;
};

inline constexpr std::size_t kDefaultColumnsLimit = 10;

/// Rado's columns condition. Blocks are chosen greedily: at each step the
/// unused-column subset with the smallest bitmask whose sum is zero (first
/// block) or lies in the span of the columns used so far. Any admissible
/// choice keeps the remainder completable, so greedy finds a certificate
/// whenever one exists.
///
/// Returns nullopt when the condition fails. Throws std::invalid_argument if
/// the matrix has more than `column_limit` columns.
std::optional<ColumnsCertificate> columns_condition(const ExactMatrix& m,
                                                    std::size_t column_limit = kDefaultColumnsLimit);

/// Exact re-check: blocks partition the columns, the first sums to zero, and
/// each combination reproduces its block sum using only earlier columns.
bool validate_certificate(const ExactMatrix& m, const ColumnsCertificate& cert);

} // namespace ipr
