#include "ipr/verify.hpp"

#include <stdexcept>

#include "ipr/colouring.hpp"
#include "ipr/linalg.hpp"

namespace ipr {

bool ObstructionReport::passed() const {
    return first_failure() == 0;
}

std::uint64_t ObstructionReport::first_failure() const {
    for (const auto& e : entries)
        if (!e.passed())
            return e.n;
    return 0;
}

ObstructionReport verify_obstruction(std::uint64_t range_limit) {
    return verify_obstruction(CoefficientSequence::canonical(range_limit));
}

ObstructionReport verify_obstruction(const CoefficientSequence& coeffs) {
    ObstructionReport report;
    report.entries.reserve(coeffs.size());
    for (std::uint64_t n = 1; n <= coeffs.size(); ++n) {
        ObstructionEntry e;
        e.n = n;
        e.coefficient = coeffs.values[n - 1];

        BigInt pow_n;
        mpz_ui_pow_ui(pow_n.get_mpz_t(), 2, n);
        const BigInt half = pow_n / 2;
        BigInt residue = e.coefficient * n;
        mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), pow_n.get_mpz_t());
        e.congruence_holds = residue == half;

        e.class_opposite = class_colour(n) != staged_colour(n);
        // 3 * 2^(n-1) is a generic class member whenever it fits in 64 bits
        if (n <= 62)
            e.class_opposite = e.class_opposite && staged_colour(3 * (std::uint64_t{1} << (n - 1))) == class_colour(n);

        e.min_expression_value = BigInt(static_cast<unsigned long>(n)) * pow_n + e.coefficient * n;
        e.exception_cleared = n > 2 || e.min_expression_value > n;
        report.entries.push_back(std::move(e));
    }
    return report;
}

bool dependence_matrices_equal(const SystemInstance& first, const SystemInstance& second) {
    return dependence_matrix(first.matrix) == dependence_matrix(second.matrix);
}

bool verify_B_equality(std::size_t depth) {
    const auto coeffs = CoefficientSequence::canonical(depth);
    return dependence_matrices_equal(build_system(SystemKind::PlainX, depth, coeffs),
                                     build_system(SystemKind::ScaledZ, depth, coeffs));
}

bool verify_image_equality_over_Q(std::size_t depth) {
    const auto coeffs = CoefficientSequence::canonical(depth);
    return column_space_equal(build_system(SystemKind::PlainX, depth, coeffs).matrix,
                              build_system(SystemKind::ScaledZ, depth, coeffs).matrix);
}

ExactMatrix schur_matrix() {
    ExactMatrix m = ExactMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
    m.set_row_labels({"x", "y", "x+y"});
    m.set_col_labels({"x", "y"});
    return m;
}

bool schur_exhaustive(std::uint64_t n, std::uint64_t k, const SchurOptions& options) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("schur_exhaustive: N and k must be >= 1");
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (total > options.enumeration_limit / k)
            throw std::invalid_argument("schur_exhaustive: " + std::to_string(k) + "^" + std::to_string(n) +
                                        " colourings exceeds the enumeration limit of " +
                                        std::to_string(options.enumeration_limit));
        total *= k;
    }

    const SearchProblem problem = SearchProblem::from_matrix(schur_matrix());
    const SearchBounds bounds{n, n, n};
    std::vector<std::uint32_t> digits(n, 0);
    for (std::uint64_t index = 0; index < total; ++index) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> assigned;
        for (std::uint64_t m = 1; m <= n; ++m)
            assigned.emplace_back(m, digits[m - 1]);
        const ColouringSpec spec = ResidueTable(1, {0}, std::move(assigned));
        if (!is_witness(find_monochromatic_image(problem, spec, bounds, {options.workers})))
            return false;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (++digits[i] < k)
                break;
            digits[i] = 0;
        }
    }
    return true;
}

} // namespace ipr
