#include "ipr/linalg.hpp"

#include <stdexcept>

namespace ipr {

RrefResult rref(const ExactMatrix& m) {
    ExactMatrix a = m;
    std::vector<Pivot> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t p = lead;
        while (p < a.rows() && a(p, c).is_zero())
            ++p;
        if (p == a.rows())
            continue;
        if (p != lead)
            for (std::size_t k = 0; k < a.cols(); ++k)
                std::swap(a(p, k), a(lead, k));
        const Rational inv = Rational(1) / a(lead, c);
        for (std::size_t k = c; k < a.cols(); ++k)
            a(lead, k) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, c).is_zero())
                continue;
            const Rational f = a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k)
                a(r, k) -= f * a(lead, k);
        }
        pivots.push_back({lead, c});
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) {
    return rref(m).pivots.size();
}

DependenceResult row_basis(const ExactMatrix& m) {
    // Incremental echelon basis. Each stored vector is reduced against all
    // earlier ones, so reducing a new row in insertion order clears every
    // earlier pivot. `combo` expresses the stored vector over the basis rows.
    struct Echelon {
        std::vector<Rational> vec;
        std::size_t pivot;
        std::vector<Rational> combo;
    };
    std::vector<Echelon> echelon;
    DependenceResult out;

    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Rational> v(m.row(r).begin(), m.row(r).end());
        std::vector<Rational> acc(echelon.size()); // row r == v + sum acc[i] * basis_i
        for (const auto& e : echelon) {
            if (v[e.pivot].is_zero())
                continue;
            const Rational t = v[e.pivot] / e.vec[e.pivot];
            for (std::size_t c = 0; c < v.size(); ++c)
                if (!e.vec[c].is_zero())
                    v[c] -= t * e.vec[c];
            for (std::size_t i = 0; i < e.combo.size(); ++i)
                if (!e.combo[i].is_zero())
                    acc[i] += t * e.combo[i];
        }

        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot].is_zero())
            ++pivot;
        if (pivot == v.size()) {
            out.dependent.push_back(r);
            out.coefficients.push_back(std::move(acc));
            continue;
        }

        // v == row r - sum acc[i] * basis_i, and row r becomes basis element k.
        const std::size_t k = echelon.size();
        for (auto& e : echelon)
            e.combo.emplace_back();
        // earlier dependent rows are padded with zeros at the end
        std::vector<Rational> combo(k + 1);
        for (std::size_t i = 0; i < k; ++i)
            combo[i] = -acc[i];
        combo[k] = Rational(1);
        echelon.push_back({std::move(v), pivot, std::move(combo)});
        out.basis.push_back(r);
    }

    for (auto& c : out.coefficients)
        c.resize(out.basis.size());
    return out;
}

ExactMatrix dependence_matrix(const ExactMatrix& m) {
    const DependenceResult dep = row_basis(m);
    const std::size_t nb = dep.basis.size();
    const std::size_t nd = dep.dependent.size();
    std::vector<std::string> col_labels;
    col_labels.reserve(nb + nd);
    for (std::size_t i : dep.basis)
        col_labels.push_back(m.row_labels()[i]);
    for (std::size_t j : dep.dependent)
        col_labels.push_back(m.row_labels()[j]);
    std::vector<std::string> row_labels;
    for (std::size_t j : dep.dependent)
        row_labels.push_back(m.row_labels()[j]);

    std::vector<Rational> entries((nb + nd) * nd);
    for (std::size_t k = 0; k < nd; ++k) {
        Rational* row = entries.data() + k * (nb + nd);
        for (std::size_t i = 0; i < nb; ++i)
            row[i] = dep.coefficients[k][i];
        row[nb + k] = Rational(-1);
    }
    return ExactMatrix(nd, nb + nd, std::move(entries), std::move(row_labels), std::move(col_labels));
}

bool column_space_equal(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("column_space_equal: row counts differ (" + std::to_string(a.rows()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    const std::size_t ra = rank(a);
    const std::size_t rb = rank(b);
    if (ra != rb)
        return false;
    return rank(a.hconcat(b)) == ra;
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& columns,
                                                   std::span<const Rational> target) {
    const std::size_t n = target.size();
    const std::size_t k = columns.size();
    std::vector<Rational> aug;
    aug.reserve(n * (k + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (const auto& col : columns) {
            if (col.size() != n)
                throw std::invalid_argument("solve_in_span: column length mismatch");
            aug.push_back(col[r]);
        }
        aug.push_back(target[r]);
    }
    const RrefResult red = rref(ExactMatrix(n, k + 1, std::move(aug)));
    std::vector<Rational> lambda(k);
    for (const auto& p : red.pivots) {
        if (p.col == k)
            return std::nullopt;
        lambda[p.col] = red.reduced(p.row, k);
    }
    return lambda;
}

std::vector<Rational> multiply(const ExactMatrix& m, std::span<const Rational> x) {
    if (x.size() != m.cols())
        throw std::invalid_argument("multiply: vector length does not match column count");
    std::vector<Rational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
                out[r] += m(r, c) * x[c];
    return out;
}

} // namespace ipr
