#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ipr/rational.hpp"

namespace ipr {

/// Dense row-major matrix of exact rationals with a label per row and column.
///
/// Labels default to `r0, r1, ...` and `c0, c1, ...`. Equality compares
/// entries only; use `same_labels` when labels matter.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries,
                std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    /// Integer matrix from nested rows; all rows must have equal length.
    static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::vector<Rational> column(std::size_t c) const;
    const std::vector<Rational>& entries() const { return entries_; }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    void set_row_labels(std::vector<std::string> labels);
    void set_col_labels(std::vector<std::string> labels);

    bool is_integral() const;

    ExactMatrix transposed() const;
    /// Columns of `this` followed by columns of `other`; row counts must agree.
    ExactMatrix hconcat(const ExactMatrix& other) const;
    ExactMatrix select_columns(std::span<const std::size_t> indices) const;
    /// Multiplies column c by scale[c].
    ExactMatrix scale_columns(std::span<const Rational> scale) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    bool same_labels(const ExactMatrix& other) const {
        return row_labels_ == other.row_labels_ && col_labels_ == other.col_labels_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

// Text format: `rows cols` on the first content line, then one line per row
// of whitespace-separated `p` or `p/q`. Lines starting with '#' and blank
// lines are ignored. Labels are written as comments and are not read back.

/// Throws std::invalid_argument with a line number on malformed input.
ExactMatrix read_matrix(std::istream& in);
ExactMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ExactMatrix& m);
std::string to_text(const ExactMatrix& m);

} // namespace ipr
