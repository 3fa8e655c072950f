#include "ipr/matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ipr {

namespace {

std::vector<std::string> default_labels(char prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : ExactMatrix(rows, cols, std::vector<Rational>(rows * cols)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : ExactMatrix(rows, cols, std::move(entries), default_labels('r', rows), default_labels('c', cols)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries,
                         std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) +
                                    " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
    set_row_labels(std::move(row_labels));
    set_col_labels(std::move(col_labels));
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("ragged rows in matrix literal");
        for (long v : row)
            entries.emplace_back(v);
    }
    return ExactMatrix(rows.size(), cols, std::move(entries));
}

std::vector<Rational> ExactMatrix::column(std::size_t c) const {
    std::vector<Rational> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back((*this)(r, c));
    return out;
}

void ExactMatrix::set_row_labels(std::vector<std::string> labels) {
    if (labels.size() != rows_)
        throw std::invalid_argument("row label count does not match row count");
    row_labels_ = std::move(labels);
}

void ExactMatrix::set_col_labels(std::vector<std::string> labels) {
    if (labels.size() != cols_)
        throw std::invalid_argument("column label count does not match column count");
    col_labels_ = std::move(labels);
}

bool ExactMatrix::is_integral() const {
    for (const auto& e : entries_) {
        if (!e.is_integer())
            return false;
    }
    return true;
}

ExactMatrix ExactMatrix::transposed() const {
    std::vector<Rational> out(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[c * rows_ + r] = (*this)(r, c);
    return ExactMatrix(cols_, rows_, std::move(out), col_labels_, row_labels_);
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& other) const {
    if (rows_ != other.rows_)
        throw std::invalid_argument("hconcat: row counts differ");
    const std::size_t cols = cols_ + other.cols_;
    std::vector<Rational> out;
    out.reserve(rows_ * cols);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto a = row(r);
        auto b = other.row(r);
        out.insert(out.end(), a.begin(), a.end());
        out.insert(out.end(), b.begin(), b.end());
    }
    auto labels = col_labels_;
    labels.insert(labels.end(), other.col_labels_.begin(), other.col_labels_.end());
    return ExactMatrix(rows_, cols, std::move(out), row_labels_, std::move(labels));
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> indices) const {
    std::vector<Rational> out;
    out.reserve(rows_ * indices.size());
    std::vector<std::string> labels;
    for (std::size_t c : indices) {
        if (c >= cols_)
            throw std::out_of_range("column index out of range");
        labels.push_back(col_labels_[c]);
    }
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : indices)
            out.push_back((*this)(r, c));
    return ExactMatrix(rows_, indices.size(), std::move(out), row_labels_, std::move(labels));
}

ExactMatrix ExactMatrix::scale_columns(std::span<const Rational> scale) const {
    if (scale.size() != cols_)
        throw std::invalid_argument("scale_columns: expected one factor per column");
    ExactMatrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) *= scale[c];
    return out;
}

ExactMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("matrix text line " + std::to_string(line_no) + ": " + what);
    };
    auto next_content = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            const auto first = out.find_first_not_of(" \t\r");
            if (first == std::string::npos || out[first] == '#')
                continue;
            return true;
        }
        return false;
    };

    if (!next_content(line))
        fail("missing `rows cols` header");
    std::size_t rows = 0;
    std::size_t cols = 0;
    {
        std::istringstream header(line);
        long long r = -1;
        long long c = -1;
        std::string extra;
        if (!(header >> r >> c) || r < 0 || c < 0 || (header >> extra))
            fail("expected `rows cols`");
        rows = static_cast<std::size_t>(r);
        cols = static_cast<std::size_t>(c);
    }

    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    // zero-width rows have no text line
    for (std::size_t r = 0; cols > 0 && r < rows; ++r) {
        if (!next_content(line))
            fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
        std::istringstream tokens(line);
        std::string tok;
        std::size_t count = 0;
        while (tokens >> tok) {
            try {
                entries.push_back(Rational::parse(tok));
            } catch (const std::exception& e) {
                fail(e.what());
            }
            ++count;
        }
        if (count != cols)
            fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(count));
    }
    if (next_content(line))
        fail("trailing content after last row");
    return ExactMatrix(rows, cols, std::move(entries));
}

ExactMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open matrix file '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
    if (m.cols() > 0) {
        out << "# columns:";
        for (const auto& l : m.col_labels())
            out << ' ' << l;
        out << '\n';
    }
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; m.cols() > 0 && r < m.rows(); ++r) {
        out << "# " << m.row_labels()[r] << '\n';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out << ' ';
            out << m(r, c);
        }
        out << '\n';
    }
}

std::string to_text(const ExactMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

} // namespace ipr
