#include "ipr/colouring.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

namespace ipr {

std::string colour_symbol(Colour c) {
    if (c == kRed)
        return "R";
    if (c == kBlue)
        return "B";
    return std::to_string(c.index);
}

unsigned two_adic_valuation(std::uint64_t m) {
    if (m < 1)
        throw std::invalid_argument("two_adic_valuation: m must be >= 1");
    return static_cast<unsigned>(std::countr_zero(m));
}

Colour staged_colour(std::uint64_t m) {
    if (m < 1)
        throw std::invalid_argument("staged_colour: m must be >= 1");
    // n < 2^(n-1) <= m for n >= 3, so the chain strictly decreases
    bool flipped = false;
    for (;;) {
        const std::uint64_t n = two_adic_valuation(m) + 1;
        if (n <= 2) {
            const Colour c = m == n ? kRed : kBlue;
            return flipped ? opposite(c) : c;
        }
        flipped = !flipped;
        m = n;
    }
}

Colour class_colour(std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("class_colour: n must be >= 1");
    if (n <= 2)
        return kBlue;
    return opposite(staged_colour(n));
}

std::vector<Colour> stage_simulation(std::uint64_t value_limit, std::uint64_t stage_limit) {
    // Stage n reads the colour of n itself, which may exceed value_limit.
    const std::uint64_t size = std::max(value_limit, stage_limit);
    std::vector<std::optional<Colour>> table(size + 1);

    for (std::uint64_t n = 1; n <= stage_limit; ++n) {
        if (n > 1 && n - 1 >= 64)
            break; // 2^(n-1) exceeds every representable value
        const std::uint64_t start = std::uint64_t{1} << (n - 1);
        if (start > size)
            break;
        std::optional<Colour> generic;
        if (n <= 2) {
            generic = kBlue;
            table[n] = kRed;
        } else {
            if (!table[n])
                throw std::logic_error("stage_simulation: stage " + std::to_string(n) + " reached before " +
                                       std::to_string(n) + " was coloured");
            generic = opposite(*table[n]);
        }
        const std::uint64_t step = start << 1;
        for (std::uint64_t m = start; m <= size; m += step) {
            if (n <= 2 && m == n)
                continue;
            table[m] = generic;
            if (m > size - step)
                break;
        }
    }

    std::vector<Colour> out;
    out.reserve(value_limit);
    for (std::uint64_t m = 1; m <= value_limit; ++m) {
        if (!table[m])
            throw std::invalid_argument("stage_simulation: " + std::to_string(m) + " is uncoloured after " +
                                        std::to_string(stage_limit) + " stages");
        out.push_back(*table[m]);
    }
    return out;
}

ResidueTable::ResidueTable(std::uint64_t modulus, std::vector<std::uint32_t> table,
                           std::vector<std::pair<std::uint64_t, std::uint32_t>> exceptions)
    : modulus_(modulus), table_(std::move(table)), exceptions_(std::move(exceptions)) {
    if (modulus_ == 0)
        throw std::invalid_argument("residue table: modulus must be >= 1");
    if (table_.size() != modulus_)
        throw std::invalid_argument("residue table: expected " + std::to_string(modulus_) + " residues, got " +
                                    std::to_string(table_.size()));
    std::sort(exceptions_.begin(), exceptions_.end());
    for (std::size_t i = 0; i < exceptions_.size(); ++i) {
        if (exceptions_[i].first < 1)
            throw std::invalid_argument("residue table: exception values must be >= 1");
        if (i > 0 && exceptions_[i].first == exceptions_[i - 1].first)
            throw std::invalid_argument("residue table: duplicate exception value " +
                                        std::to_string(exceptions_[i].first));
    }
}

Colour ResidueTable::colour(std::uint64_t m) const {
    auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(), m,
                               [](const auto& e, std::uint64_t v) { return e.first < v; });
    if (it != exceptions_.end() && it->first == m)
        return Colour{it->second};
    return Colour{table_[m % modulus_]};
}

Colour colour_of(const ColouringSpec& spec, std::uint64_t m) {
    if (m < 1)
        throw std::invalid_argument("colour_of: m must be >= 1");
    if (const auto* table = std::get_if<ResidueTable>(&spec))
        return table->colour(m);
    return staged_colour(m);
}

} // namespace ipr
