#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

#include "ipr/linalg.hpp"
#include "ipr/systems.hpp"

using namespace ipr;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<Rational> e;
    for (std::size_t i = 0; i < rows * cols; ++i)
        e.emplace_back(d(rng));
    return ExactMatrix(rows, cols, std::move(e));
}

// A few rows repeated as integer combinations so there is something to depend on.
ExactMatrix random_dependent_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    ExactMatrix m = random_matrix(rng, rows, cols, -3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, rows - 1);
    std::uniform_int_distribution<long> w(-2, 2);
    for (int k = 0; k < 2; ++k) {
        const std::size_t target = pick(rng);
        const std::size_t a = pick(rng);
        const std::size_t b = pick(rng);
        if (target == a || target == b)
            continue;
        for (std::size_t c = 0; c < cols; ++c)
            m(target, c) = Rational(w(rng)) * m(a, c) + Rational(w(rng)) * m(b, c);
    }
    return m;
}

bool is_rref(const RrefResult& r) {
    const ExactMatrix& m = r.reduced;
    std::size_t prev_col = 0;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        const auto [row, col] = r.pivots[k];
        if (row != k || (k > 0 && col <= prev_col))
            return false;
        if (m(row, col) != Rational(1))
            return false;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != row && !m(i, col).is_zero())
                return false;
        for (std::size_t c = 0; c < col; ++c)
            if (!m(row, c).is_zero())
                return false;
        prev_col = col;
    }
    for (std::size_t i = r.pivots.size(); i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(i, c).is_zero())
                return false;
    return true;
}

ExactMatrix schur() { return ExactMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}}); }

} // namespace

TEST_CASE("rref examples") {
    const auto id = rref(ExactMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(id.reduced == ExactMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(id.pivots == std::vector<Pivot>{{0, 0}, {1, 1}});

    const auto zero = rref(ExactMatrix(2, 3));
    CHECK(zero.reduced == ExactMatrix(2, 3));
    CHECK(zero.pivots.empty());

    // hand elimination: R1 /= 2 -> (1,2); R2 -= R1 -> (0,1); R1 -= 2 R2 -> (1,0)
    const auto r = rref(ExactMatrix::from_rows({{2, 4}, {1, 3}}));
    CHECK(r.reduced == ExactMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(r.pivots == std::vector<Pivot>{{0, 0}, {1, 1}});
}

TEST_CASE("rref is reduced, idempotent and preserves the row space") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const ExactMatrix a = random_dependent_matrix(rng, 5, 4);
        const RrefResult r = rref(a);
        REQUIRE(is_rref(r));
        REQUIRE(rref(r.reduced).reduced == r.reduced);
        // same row space: stacking does not raise the rank
        REQUIRE(rank(a.transposed().hconcat(r.reduced.transposed())) == r.pivots.size());
    }
}

TEST_CASE("row_basis examples") {
    const auto id = row_basis(ExactMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.basis == std::vector<std::size_t>{0, 1, 2});
    CHECK(id.dependent.empty());

    // (1,1) = a (1,0) + b (0,1) has the unique solution a = b = 1
    const auto s = row_basis(schur());
    CHECK(s.basis == std::vector<std::size_t>{0, 1});
    CHECK(s.dependent == std::vector<std::size_t>{2});
    CHECK(s.coefficients == std::vector<std::vector<Rational>>{{1, 1}});

    // depth-1 system: (0,1) = a (1,1) + b (1,0) gives a = 1, b = -1
    const auto d1 = row_basis(ExactMatrix::from_rows({{1, 1}, {1, 0}, {0, 1}}));
    CHECK(d1.basis == std::vector<std::size_t>{0, 1});
    CHECK(d1.dependent == std::vector<std::size_t>{2});
    CHECK(d1.coefficients == std::vector<std::vector<Rational>>{{1, -1}});
}

TEST_CASE("duplicate and zero rows land in the dependent set") {
    const auto r = row_basis(ExactMatrix::from_rows({{1, 2}, {0, 0}, {1, 2}, {3, 5}}));
    CHECK(r.basis == std::vector<std::size_t>{0, 3});
    CHECK(r.dependent == std::vector<std::size_t>{1, 2});
    CHECK(r.coefficients == std::vector<std::vector<Rational>>{{0, 0}, {1, 0}});
}

TEST_CASE("row_basis reconstruction and independence") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 80; ++i) {
        const ExactMatrix a = random_dependent_matrix(rng, 6, 4);
        const DependenceResult d = row_basis(a);
        std::vector<std::size_t> all = d.basis;
        all.insert(all.end(), d.dependent.begin(), d.dependent.end());
        std::sort(all.begin(), all.end());
        for (std::size_t k = 0; k < all.size(); ++k)
            REQUIRE(all[k] == k);
        REQUIRE(all.size() == a.rows());

        const ExactMatrix basis_rows = a.transposed().select_columns(d.basis);
        REQUIRE(rank(basis_rows) == d.basis.size());
        for (std::size_t k = 0; k < d.dependent.size(); ++k) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                Rational s;
                for (std::size_t i = 0; i < d.basis.size(); ++i)
                    s += d.coefficients[k][i] * a(d.basis[i], c);
                REQUIRE(s == a(d.dependent[k], c));
            }
        }
    }
}

TEST_CASE("dependence_matrix examples") {
    const ExactMatrix empty = dependence_matrix(ExactMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 3);

    const ExactMatrix b = dependence_matrix(schur());
    CHECK(b == ExactMatrix::from_rows({{1, 1, -1}}));
    CHECK(b.col_labels() == std::vector<std::string>{"r0", "r1", "r2"});
}

TEST_CASE("dependence_matrix of the depth-2 system matches the frozen fixture") {
    // frozen from tests/oracles/frozen_values.py (independent fraction-based elimination)
    const auto sys = build_system(SystemKind::PlainX, 2, CoefficientSequence::canonical(2));
    const ExactMatrix b = dependence_matrix(sys.matrix);
    CHECK(b == ExactMatrix::from_rows({{-1, 1, 1, -1, -1, 0}, {1, 0, -1, 0, 0, -1}}));
    CHECK(b.row_labels() == std::vector<std::string>{"x_2_2", "y"});
    CHECK(b.col_labels() == std::vector<std::string>{"E1", "E2", "x_1_1", "x_2_1", "x_2_2", "y"});
}

TEST_CASE("B(A) annihilates every image, reordered as basis then dependent rows") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 60; ++i) {
        const ExactMatrix a = random_dependent_matrix(rng, 6, 3);
        const DependenceResult dep = row_basis(a);
        const ExactMatrix b = dependence_matrix(a);
        std::vector<Rational> x;
        for (std::size_t c = 0; c < a.cols(); ++c)
            x.emplace_back(BigInt(d(rng)), BigInt(3));
        const std::vector<Rational> image = multiply(a, x);
        std::vector<Rational> ordered;
        for (auto r : dep.basis)
            ordered.push_back(image[r]);
        for (auto r : dep.dependent)
            ordered.push_back(image[r]);
        for (const auto& v : multiply(b, ordered))
            REQUIRE(v.is_zero());
    }
}

TEST_CASE("dependence_matrix is invariant under invertible column scaling") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> s(-6, 6);
    for (int i = 0; i < 100; ++i) {
        const ExactMatrix a = random_dependent_matrix(rng, 5, 4);
        std::vector<Rational> scale;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            long p = 0;
            while (p == 0)
                p = s(rng);
            scale.emplace_back(BigInt(p), BigInt(1 + (i + static_cast<int>(c)) % 4));
        }
        REQUIRE(dependence_matrix(a.scale_columns(scale)) == dependence_matrix(a));
    }
}

TEST_CASE("column_space_equal examples") {
    const ExactMatrix a = ExactMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
    const std::vector<Rational> d{Rational(3), Rational(-2)};
    CHECK(column_space_equal(a, a.scale_columns(d)));
    CHECK(column_space_equal(a, a.hconcat(ExactMatrix(3, 1))));
    CHECK_FALSE(column_space_equal(schur(), ExactMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    CHECK_THROWS_AS(column_space_equal(a, ExactMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("column_space_equal is reflexive, symmetric and permutation invariant") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        const ExactMatrix a = random_dependent_matrix(rng, 4, 3);
        const ExactMatrix b = random_dependent_matrix(rng, 4, 3);
        REQUIRE(column_space_equal(a, a));
        REQUIRE(column_space_equal(a, b) == column_space_equal(b, a));
        std::vector<std::size_t> perm{2, 0, 1};
        REQUIRE(column_space_equal(a.select_columns(perm), a));
        REQUIRE(column_space_equal(a.select_columns(perm), b) == column_space_equal(a, b));
    }
}

TEST_CASE("solve_in_span") {
    const std::vector<std::vector<Rational>> cols{{1, 0, 1}, {0, 1, 1}};
    const std::vector<Rational> inside{2, 3, 5};
    const auto l = solve_in_span(cols, inside);
    REQUIRE(l);
    CHECK(*l == std::vector<Rational>{2, 3});
    const std::vector<Rational> outside{1, 1, 1};
    CHECK_FALSE(solve_in_span(cols, outside));
    const std::vector<Rational> zero{0, 0};
    CHECK(solve_in_span({}, zero));
    const std::vector<Rational> nonzero{0, 1};
    CHECK_FALSE(solve_in_span({}, nonzero));
}

TEST_CASE("matrix text format") {
    SUBCASE("round trip is exact") {
        std::mt19937_64 rng(29);
        for (int i = 0; i < 20; ++i) {
            ExactMatrix m = random_matrix(rng, 3, 4, -50, 50);
            m(1, 2) = Rational(BigInt(-7), BigInt(12));
            std::istringstream in(to_text(m));
            REQUIRE(read_matrix(in) == m);
        }
        std::istringstream in(to_text(ExactMatrix(0, 4)));
        CHECK(read_matrix(in) == ExactMatrix(0, 4));
        std::istringstream in2(to_text(ExactMatrix(3, 0)));
        CHECK(read_matrix(in2) == ExactMatrix(3, 0));
    }
    SUBCASE("comments and blank lines are ignored") {
        std::istringstream in("# header\n2 2\n\n# row a\n1 -1/2\n  3/3 0\n");
        const ExactMatrix m = read_matrix(in);
        CHECK(m(0, 1) == Rational(BigInt(-1), BigInt(2)));
        CHECK(m(1, 0) == Rational(1));
    }
    SUBCASE("malformed input") {
        for (const char* bad : {"", "2\n1 2\n", "1 2\n1\n", "1 2\n1 2 3\n", "2 1\n1\n", "1 1\n1/0\n",
                                "1 1\nx\n", "1 1\n1\n2\n", "-1 2\n"}) {
            CAPTURE(bad);
            std::istringstream in(bad);
            CHECK_THROWS_AS(read_matrix(in), std::invalid_argument);
        }
    }
}

TEST_CASE("ExactMatrix validates shapes") {
    CHECK_THROWS_AS(ExactMatrix(2, 2, std::vector<Rational>(3)), std::invalid_argument);
    CHECK_THROWS_AS(ExactMatrix(1, 1, {Rational(1)}, {"a", "b"}, {"c"}), std::invalid_argument);
    CHECK_THROWS_AS(ExactMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
}
