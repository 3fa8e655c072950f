#pragma once

// Pruned depth-first enumeration shared by the parallel kernel and the serial
// reference. Internal to the library.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ipr/search.hpp"

namespace ipr::detail {

struct CompiledProblem {
    std::size_t rows = 0;
    std::size_t vars = 0;
    std::vector<std::int64_t> coef;        // row-major
    std::vector<std::int64_t> modulus;     // 0 when the variable has no admissible value
    std::vector<std::int64_t> bound;       // per variable
    std::optional<std::int64_t> image_max;
};

inline CompiledProblem compile(const SearchProblem& p, const SearchBounds& b) {
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    const ExactMatrix& m = p.matrix;
    if (m.cols() == 0)
        throw std::invalid_argument("search: matrix has no variables");
    if (p.divisibility.size() != m.cols() || p.variable_labels.size() != m.cols())
        throw std::invalid_argument("search: need one label and one modulus per column");
    if (b.y_bound < 1 || b.var_bound < 1)
        throw std::invalid_argument("search: bounds must be >= 1");
    if (b.y_bound > static_cast<std::uint64_t>(kMax) || b.var_bound > static_cast<std::uint64_t>(kMax))
        throw std::invalid_argument("search: bounds exceed the 64-bit search width");
    if (b.image_max && *b.image_max > static_cast<std::uint64_t>(kMax))
        throw std::invalid_argument("search: image cap exceeds the 64-bit search width");
    if (!m.is_integral())
        throw std::invalid_argument("search: matrix entries must be integers");

    CompiledProblem cp;
    cp.rows = m.rows();
    cp.vars = m.cols();
    cp.coef.resize(cp.rows * cp.vars);
    for (std::size_t v = 0; v < cp.vars; ++v) {
        const BigInt& d = p.divisibility[v];
        if (d < 1)
            throw std::invalid_argument("search: divisibility moduli must be >= 1");
        const auto bound = static_cast<std::int64_t>(v + 1 == cp.vars ? b.y_bound : b.var_bound);
        cp.bound.push_back(bound);
        cp.modulus.push_back(d > bound ? 0 : d.get_si());
    }
    const BigInt limit(std::to_string(kMax));
    for (std::size_t r = 0; r < cp.rows; ++r) {
        BigInt worst = 0;
        for (std::size_t c = 0; c < cp.vars; ++c) {
            const BigInt a = m(r, c).numerator();
            worst += abs(a) * BigInt(std::to_string(cp.bound[c]));
            if (abs(a) > limit)
                throw std::invalid_argument("search: matrix entry exceeds the 64-bit search width");
            cp.coef[r * cp.vars + c] = a.get_si();
        }
        if (worst > limit)
            throw std::invalid_argument("search: row " + std::to_string(r) +
                                        " can exceed the 64-bit search width at these bounds");
    }
    if (b.image_max)
        cp.image_max = static_cast<std::int64_t>(*b.image_max);
    return cp;
}

/// Depth-first search over the variables in `order`, in that order, each
/// ranging over positive multiples of its modulus up to its bound. Variables
/// with a preset value are assigned up front and must not appear in `order`.
/// Only `rows` are checked, each as soon as its last non-preset variable is
/// assigned; every row in `rows` must depend only on preset or ordered
/// variables. With a target colour every checked row must have it; without
/// one, the first checked row fixes the colour.
class PrunedDfs {
public:
    PrunedDfs(const CompiledProblem& cp, const ColouringSpec& spec, std::vector<std::size_t> order,
              const std::vector<std::optional<std::int64_t>>& preset, const std::vector<std::size_t>& rows,
              std::optional<Colour> target = std::nullopt)
        : cp_(cp), spec_(spec), order_(std::move(order)), partial_(cp.rows, 0), value_(cp.vars, 0),
          completes_(order_.size() + 1), colour_(target) {
        for (std::size_t v = 0; v < cp_.vars; ++v)
            if (preset[v])
                assign(v, *preset[v]);
        std::vector<std::size_t> position(cp_.vars, 0); // 0 = preset or absent
        for (std::size_t k = 0; k < order_.size(); ++k)
            position[order_[k]] = k + 1;
        for (std::size_t r : rows) {
            std::size_t last = 0;
            for (std::size_t c = 0; c < cp_.vars; ++c)
                if (cp_.coef[r * cp_.vars + c] != 0)
                    last = std::max(last, position[c]);
            completes_[last].push_back(r);
        }
    }

    /// Values in variable index order of the first complete assignment.
    std::optional<std::vector<std::int64_t>> run() {
        if (!check(0))
            return std::nullopt;
        if (descend(0))
            return value_;
        return std::nullopt;
    }

private:
    bool check(std::size_t level) {
        for (std::size_t r : completes_[level]) {
            const std::int64_t v = partial_[r];
            if (v <= 0 || (cp_.image_max && v > *cp_.image_max))
                return false;
            const Colour c = colour_of(spec_, static_cast<std::uint64_t>(v));
            if (!colour_) {
                colour_ = c;
                colour_level_ = level;
            } else if (*colour_ != c) {
                return false;
            }
        }
        return true;
    }

    void assign(std::size_t var, std::int64_t delta) {
        value_[var] += delta;
        for (std::size_t r = 0; r < cp_.rows; ++r) {
            const std::int64_t a = cp_.coef[r * cp_.vars + var];
            if (a != 0)
                partial_[r] += a * delta;
        }
    }

    bool descend(std::size_t k) {
        if (k == order_.size())
            return true;
        const std::size_t var = order_[k];
        const std::int64_t step = cp_.modulus[var];
        if (step == 0)
            return false;
        const std::int64_t last = cp_.bound[var];
        for (std::int64_t x = step; x <= last; x += step) {
            assign(var, x);
            if (check(k + 1) && descend(k + 1))
                return true;
            assign(var, -x);
            if (colour_ && colour_level_ > k)
                colour_.reset();
            if (x > last - step)
                break;
        }
        return false;
    }

    const CompiledProblem& cp_;
    const ColouringSpec& spec_;
    std::vector<std::size_t> order_;
    std::vector<std::int64_t> partial_;
    std::vector<std::int64_t> value_;
    std::vector<std::vector<std::size_t>> completes_; // rows completed after k assignments
    std::optional<Colour> colour_;
    std::size_t colour_level_ = 0; // a target colour sits at level 0 and is never reset
};

inline Witness make_witness(const SearchProblem& p, const CompiledProblem& cp, const ColouringSpec& spec,
                            const std::vector<std::int64_t>& values) {
    Witness w;
    for (std::size_t v = 0; v < cp.vars; ++v)
        w.assignment.emplace_back(p.variable_labels[v], values[v]);
    for (std::size_t r = 0; r < cp.rows; ++r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < cp.vars; ++c)
            s += cp.coef[r * cp.vars + c] * values[c];
        w.image.push_back(s);
    }
    w.colour = w.image.empty() ? kRed : colour_of(spec, static_cast<std::uint64_t>(w.image.front()));
    return w;
}

inline Exhausted make_exhausted(const SearchProblem& p, const SearchBounds& b) {
    return Exhausted{b.y_bound, b.var_bound, b.image_max, p.divisibility};
}

} // namespace ipr::detail
