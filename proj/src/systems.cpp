#include "ipr/systems.hpp"

#include <bit>
#include <stdexcept>

namespace ipr {

namespace {

BigInt pow2(unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

bool is_power_of_two(const BigInt& v) {
    return v > 0 && mpz_popcount(v.get_mpz_t()) == 1;
}

} // namespace

BigInt modular_inverse(const BigInt& a, const BigInt& modulus) {
    if (a <= 0 || mpz_even_p(a.get_mpz_t()))
        throw std::invalid_argument("modular_inverse: " + a.get_str() + " is not an odd positive integer");
    if (modulus < 2 || !is_power_of_two(modulus))
        throw std::invalid_argument("modular_inverse: modulus " + modulus.get_str() + " is not a power of two >= 2");

    // Newton lifting: if a*b == 1 mod 2^k then b*(2 - a*b) is the inverse mod 2^2k.
    // Every odd a is its own inverse mod 8.
    const std::size_t bits = mpz_sizeinbase(modulus.get_mpz_t(), 2) - 1;
    BigInt b = a % 8;
    std::size_t precision = 3;
    while (precision < bits) {
        b = b * (2 - a * b);
        precision *= 2;
        mpz_fdiv_r_2exp(b.get_mpz_t(), b.get_mpz_t(), precision);
    }
    mpz_fdiv_r_2exp(b.get_mpz_t(), b.get_mpz_t(), bits);
    return b;
}

BigInt solve_coefficient(unsigned long n) {
    if (n < 1)
        throw std::invalid_argument("solve_coefficient: n must be >= 1");
    // n = 2^k p with p odd and k < n; solve c p == 2^(n-k-1) (mod 2^(n-k)).
    const unsigned long k = static_cast<unsigned long>(std::countr_zero(n));
    const BigInt p = BigInt(n >> k);
    const BigInt modulus = pow2(n - k);
    BigInt c = pow2(n - k - 1) * modular_inverse(p, modulus);
    mpz_fdiv_r_2exp(c.get_mpz_t(), c.get_mpz_t(), n - k);
    return c == 0 ? modulus : c;
}

CoefficientSequence CoefficientSequence::canonical(std::size_t depth) {
    CoefficientSequence seq;
    seq.values.reserve(depth);
    for (std::size_t n = 1; n <= depth; ++n)
        seq.values.push_back(solve_coefficient(n));
    return seq;
}

bool CoefficientSequence::satisfies_congruences() const {
    for (std::size_t n = 1; n <= values.size(); ++n) {
        BigInt lhs = values[n - 1] * static_cast<unsigned long>(n);
        mpz_fdiv_r_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), n);
        if (lhs != pow2(n - 1))
            return false;
    }
    return true;
}

std::string_view to_string(SystemKind kind) {
    return kind == SystemKind::PlainX ? "plain-x" : "scaled-z";
}

SystemKind parse_system_kind(std::string_view text) {
    if (text == "1" || text == "plain" || text == "x" || text == "plain-x")
        return SystemKind::PlainX;
    if (text == "2" || text == "scaled" || text == "z" || text == "scaled-z")
        return SystemKind::ScaledZ;
    throw std::invalid_argument("unknown system kind '" + std::string(text) + "' (expected 1 or 2)");
}

std::string variable_label(SystemKind kind, std::size_t i, std::size_t j) {
    return std::string(kind == SystemKind::PlainX ? "x_" : "z_") + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<std::size_t> variable_levels(std::size_t depth) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= depth; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            out.push_back(i);
    out.push_back(0);
    return out;
}

SystemInstance build_system(SystemKind kind, std::size_t depth, const CoefficientSequence& coeffs) {
    if (depth < 1)
        throw std::invalid_argument("build_system: depth must be >= 1");
    if (coeffs.size() < depth)
        throw std::invalid_argument("build_system: need " + std::to_string(depth) + " coefficients, got " +
                                    std::to_string(coeffs.size()));

    const std::vector<std::size_t> level = variable_levels(depth);
    const std::size_t vars = level.size();
    const std::size_t y = vars - 1;
    const std::size_t rows = depth + vars;
    const bool scaled = kind == SystemKind::ScaledZ;
    auto weight = [&](std::size_t i) { return scaled ? Rational(pow2(i)) : Rational(1); };

    SystemInstance sys;
    sys.kind = kind;
    sys.depth = depth;
    sys.coefficients.values.assign(coeffs.values.begin(), coeffs.values.begin() + static_cast<long>(depth));

    for (std::size_t i = 1; i <= depth; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            sys.variable_labels.push_back(variable_label(kind, i, j));
    sys.variable_labels.push_back("y");

    for (std::size_t v = 0; v < vars; ++v)
        sys.divisibility.push_back(scaled || v == y ? BigInt(1) : pow2(level[v]));

    std::vector<Rational> entries(rows * vars);
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return entries[r * vars + c]; };
    for (std::size_t n = 1; n <= depth; ++n) {
        for (std::size_t v = 0; v < y; ++v)
            if (level[v] == n)
                at(n - 1, v) = weight(n);
        at(n - 1, y) = Rational(sys.coefficients.values[n - 1]);
    }
    for (std::size_t v = 0; v < y; ++v)
        at(depth + v, v) = weight(level[v]);
    at(rows - 1, y) = Rational(1);

    std::vector<std::string> row_labels;
    for (std::size_t n = 1; n <= depth; ++n)
        row_labels.push_back("E" + std::to_string(n));
    row_labels.insert(row_labels.end(), sys.variable_labels.begin(), sys.variable_labels.end());

    sys.matrix = ExactMatrix(rows, vars, std::move(entries), std::move(row_labels), sys.variable_labels);
    return sys;
}

SystemInstance scale_to_second(const SystemInstance& system) {
    if (system.kind != SystemKind::PlainX)
        throw std::invalid_argument("scale_to_second: input must be the plain x system");

    const std::vector<std::size_t> level = variable_levels(system.depth);
    std::vector<Rational> scale;
    for (std::size_t v = 0; v < level.size(); ++v)
        scale.emplace_back(level[v] == 0 ? BigInt(1) : pow2(level[v]));

    SystemInstance out;
    out.kind = SystemKind::ScaledZ;
    out.depth = system.depth;
    out.coefficients = system.coefficients;
    for (std::size_t i = 1; i <= system.depth; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            out.variable_labels.push_back(variable_label(SystemKind::ScaledZ, i, j));
    out.variable_labels.push_back("y");
    out.divisibility.assign(level.size(), BigInt(1));

    // column scaling acts on the image rows too: row x_ij becomes 2^i z_ij
    out.matrix = system.matrix.scale_columns(scale);
    std::vector<std::string> row_labels;
    for (std::size_t n = 1; n <= system.depth; ++n)
        row_labels.push_back("E" + std::to_string(n));
    row_labels.insert(row_labels.end(), out.variable_labels.begin(), out.variable_labels.end());
    out.matrix.set_row_labels(std::move(row_labels));
    out.matrix.set_col_labels(out.variable_labels);
    return out;
}

} // namespace ipr
