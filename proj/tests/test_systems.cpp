#include <stdexcept>

#include "doctest.h"

#include "ipr/linalg.hpp"
#include "ipr/systems.hpp"

using namespace ipr;

namespace {

BigInt pow2(unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

// brute force: first b in [1, modulus] with a b == 1
long scan_inverse(long a, long modulus) {
    for (long b = 1; b <= modulus; ++b)
        if ((a * b) % modulus == 1 % modulus)
            return b;
    return -1;
}

} // namespace

TEST_CASE("modular_inverse examples") {
    CHECK(modular_inverse(1, 2) == 1);
    CHECK(modular_inverse(3, 8) == 3);
    CHECK(modular_inverse(5, 32) == 13);
}

TEST_CASE("modular_inverse agrees with a linear scan") {
    for (long m = 1; m <= 12; ++m) {
        const long modulus = 1L << m;
        for (long a = 1; a < 200; a += 2)
            REQUIRE(modular_inverse(a, modulus) == scan_inverse(a, modulus));
    }
    // large modulus: check the defining property
    const BigInt modulus = pow2(200);
    const BigInt a("123456789012345678901234567891", 10);
    CHECK((a * modular_inverse(a, modulus)) % modulus == 1);
}

TEST_CASE("modular_inverse rejects bad arguments") {
    CHECK_THROWS_AS(modular_inverse(4, 8), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(-3, 8), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(3, 12), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(modular_inverse(3, 0), std::invalid_argument);
}

TEST_CASE("solve_coefficient published and scanned values") {
    const long published[] = {1, 1, 4, 2, 16};
    for (unsigned long n = 1; n <= 5; ++n)
        CHECK(solve_coefficient(n) == published[n - 1]);
    // scan c = 1..2^n for c n == 2^(n-1) mod 2^n
    CHECK(solve_coefficient(6) == 16);
    CHECK(solve_coefficient(8) == 16);
    CHECK_THROWS_AS(solve_coefficient(0), std::invalid_argument);
}

TEST_CASE("solve_coefficient satisfies the congruence for n <= 64") {
    for (unsigned long n = 1; n <= 64; ++n) {
        const BigInt c = solve_coefficient(n);
        CHECK(c > 0);
        CHECK((c * n) % pow2(n) == pow2(n - 1));
    }
}

TEST_CASE("solve_coefficient is the least solution for n <= 20") {
    for (unsigned long n = 1; n <= 20; ++n) {
        const unsigned long modulus = 1UL << n;
        unsigned long least = 0;
        for (unsigned long c = 1; c <= modulus; ++c) {
            if ((c * n) % modulus == modulus / 2) {
                least = c;
                break;
            }
        }
        CAPTURE(n);
        REQUIRE(solve_coefficient(n) == least);
    }
}

TEST_CASE("coefficient sequences") {
    CHECK(CoefficientSequence::canonical(5).values == std::vector<BigInt>{1, 1, 4, 2, 16});
    CHECK(CoefficientSequence::canonical(40).satisfies_congruences());
    CoefficientSequence bad = CoefficientSequence::canonical(5);
    bad.values[2] = 1;
    CHECK_FALSE(bad.satisfies_congruences());
}

TEST_CASE("build_system examples") {
    const auto one = build_system(SystemKind::PlainX, 1, CoefficientSequence{{1}});
    CHECK(one.matrix == ExactMatrix::from_rows({{1, 1}, {1, 0}, {0, 1}}));
    CHECK(one.variable_labels == std::vector<std::string>{"x_1_1", "y"});
    CHECK(one.matrix.row_labels() == std::vector<std::string>{"E1", "x_1_1", "y"});

    const auto two = build_system(SystemKind::ScaledZ, 1, CoefficientSequence{{1}});
    CHECK(two.matrix == ExactMatrix::from_rows({{2, 1}, {2, 0}, {0, 1}}));
    CHECK(two.variable_labels == std::vector<std::string>{"z_1_1", "y"});
    CHECK(two.divisibility == std::vector<BigInt>{1, 1});

    const auto d2 = build_system(SystemKind::PlainX, 2, CoefficientSequence{{1, 1}});
    CHECK(d2.matrix.rows() == 6);
    CHECK(d2.matrix.cols() == 4);
    CHECK(d2.divisibility == std::vector<BigInt>{2, 4, 4, 1});
    CHECK(d2.matrix == ExactMatrix::from_rows({{1, 0, 0, 1},
                                                {0, 1, 1, 1},
                                                {1, 0, 0, 0},
                                                {0, 1, 0, 0},
                                                {0, 0, 1, 0},
                                                {0, 0, 0, 1}}));
}

TEST_CASE("build_system errors") {
    CHECK_THROWS_AS(build_system(SystemKind::PlainX, 0, CoefficientSequence{{1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_system(SystemKind::PlainX, 3, CoefficientSequence{{1, 1}}), std::invalid_argument);
}

TEST_CASE("build_system accepts arbitrary integer coefficients") {
    const auto sys = build_system(SystemKind::PlainX, 2, CoefficientSequence{{-5, 0}});
    CHECK(sys.matrix(0, 3) == Rational(-5));
    CHECK(sys.matrix(1, 3) == Rational(0));
}

TEST_CASE("system shape and entries for depth <= 8") {
    for (std::size_t d = 1; d <= 8; ++d) {
        const auto coeffs = CoefficientSequence::canonical(d);
        for (auto kind : {SystemKind::PlainX, SystemKind::ScaledZ}) {
            const auto sys = build_system(kind, d, coeffs);
            const std::size_t vars = d * (d + 1) / 2 + 1;
            REQUIRE(sys.matrix.rows() == d + vars);
            REQUIRE(sys.matrix.cols() == vars);
            REQUIRE(sys.variable_labels.size() == vars);
            REQUIRE(sys.divisibility.size() == vars);
            REQUIRE(sys.variable_labels.back() == "y");
            for (const auto& e : sys.matrix.entries())
                REQUIRE((e.is_integer() && e.sign() >= 0));

            const auto level = variable_levels(d);
            for (std::size_t v = 0; v < vars; ++v) {
                const BigInt expected = kind == SystemKind::PlainX && level[v] > 0 ? pow2(level[v]) : BigInt(1);
                REQUIRE(sys.divisibility[v] == expected);
            }
            // expression row n: weight on x_n*, c_n on y, zero elsewhere
            for (std::size_t n = 1; n <= d; ++n) {
                for (std::size_t v = 0; v + 1 < vars; ++v) {
                    const Rational w = level[v] != n ? Rational(0)
                                     : kind == SystemKind::PlainX ? Rational(1) : Rational(pow2(n));
                    REQUIRE(sys.matrix(n - 1, v) == w);
                }
                REQUIRE(sys.matrix(n - 1, vars - 1) == Rational(coeffs.values[n - 1]));
            }
        }
    }
}

TEST_CASE("scale_to_second matches the direct construction for depth <= 8") {
    for (std::size_t d = 1; d <= 8; ++d) {
        const auto coeffs = CoefficientSequence::canonical(d);
        const auto first = build_system(SystemKind::PlainX, d, coeffs);
        const auto scaled = scale_to_second(first);
        const auto direct = build_system(SystemKind::ScaledZ, d, coeffs);
        REQUIRE(scaled.matrix == direct.matrix);
        REQUIRE(scaled.matrix.same_labels(direct.matrix));
        REQUIRE(scaled.variable_labels == direct.variable_labels);
        REQUIRE(scaled.divisibility == direct.divisibility);
        REQUIRE(scaled.coefficients == direct.coefficients);
        REQUIRE(scaled.kind == SystemKind::ScaledZ);

        // dividing the z columns by 2^i gives the x system back
        std::vector<Rational> inverse;
        for (auto level : variable_levels(d))
            inverse.emplace_back(BigInt(1), level == 0 ? BigInt(1) : pow2(level));
        REQUIRE(scaled.matrix.scale_columns(inverse) == first.matrix);
    }
    CHECK_THROWS_AS(scale_to_second(build_system(SystemKind::ScaledZ, 2, CoefficientSequence::canonical(2))),
                    std::invalid_argument);
}

TEST_CASE("system kind parsing") {
    CHECK(parse_system_kind("1") == SystemKind::PlainX);
    CHECK(parse_system_kind("z") == SystemKind::ScaledZ);
    CHECK(parse_system_kind(to_string(SystemKind::ScaledZ)) == SystemKind::ScaledZ);
    CHECK_THROWS_AS(parse_system_kind("3"), std::invalid_argument);
}
