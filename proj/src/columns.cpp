#include "ipr/columns.hpp"

#include <cstdint>
#include <stdexcept>

#include "ipr/linalg.hpp"

namespace ipr {

namespace {

std::vector<Rational> column_sum(const ExactMatrix& m, const std::vector<std::size_t>& cols) {
    std::vector<Rational> s(m.rows());
    for (std::size_t c : cols)
        for (std::size_t r = 0; r < m.rows(); ++r)
            s[r] += m(r, c);
    return s;
}

bool is_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

} // namespace

std::optional<ColumnsCertificate> columns_condition(const ExactMatrix& m, std::size_t column_limit) {
    if (m.cols() > column_limit)
        throw std::invalid_argument("columns_condition: " + std::to_string(m.cols()) +
                                    " columns exceeds the limit of " + std::to_string(column_limit));
    if (m.cols() >= 63)
        throw std::invalid_argument("columns_condition: at most 62 columns are supported");

    const std::uint64_t all = (std::uint64_t{1} << m.cols()) - 1;
    std::uint64_t remaining = all;
    std::vector<std::size_t> used;
    ColumnsCertificate cert;

    while (remaining != 0) {
        std::vector<std::vector<Rational>> span;
        for (std::size_t c : used)
            span.push_back(m.column(c));

        bool placed = false;
        for (std::uint64_t mask = 1; mask <= all && !placed; ++mask) {
            if ((mask & ~remaining) != 0)
                continue;
            std::vector<std::size_t> cols;
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (mask >> c & 1)
                    cols.push_back(c);
            const std::vector<Rational> sum = column_sum(m, cols);

            ColumnBlock block;
            if (used.empty()) {
                if (!is_zero(sum))
                    continue;
            } else {
                auto lambda = solve_in_span(span, sum);
                if (!lambda)
                    continue;
                for (std::size_t k = 0; k < used.size(); ++k)
                    if (!(*lambda)[k].is_zero())
                        block.combination.emplace_back(used[k], (*lambda)[k]);
            }
            block.columns = std::move(cols);
            used.insert(used.end(), block.columns.begin(), block.columns.end());
            remaining &= ~mask;
            cert.blocks.push_back(std::move(block));
            placed = true;
        }
        if (!placed)
            return std::nullopt;
    }
    return cert;
}

bool validate_certificate(const ExactMatrix& m, const ColumnsCertificate& cert) {
    std::vector<bool> seen(m.cols(), false);
    for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
        const ColumnBlock& block = cert.blocks[b];
        if (block.columns.empty())
            return false;
        for (const auto& [col, coeff] : block.combination)
            if (col >= m.cols() || !seen[col])
                return false;
        for (std::size_t c : block.columns) {
            if (c >= m.cols() || seen[c])
                return false;
        }
        std::vector<Rational> diff = column_sum(m, block.columns);
        if (b == 0 && !block.combination.empty())
            return false;
        for (const auto& [col, coeff] : block.combination)
            for (std::size_t r = 0; r < m.rows(); ++r)
                diff[r] -= coeff * m(r, col);
        if (!is_zero(diff))
            return false;
        for (std::size_t c : block.columns)
            seen[c] = true;
    }
    for (bool s : seen)
        if (!s)
            return false;
    return true;
}

} // namespace ipr
