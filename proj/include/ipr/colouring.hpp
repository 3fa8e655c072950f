#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ipr {

/// Colour index. The staged colouring uses only Red (0) and Blue (1);
/// residue-table colourings may use any index.
struct Colour {
    std::uint32_t index = 0;
    friend auto operator<=>(const Colour&, const Colour&) = default;
};

inline constexpr Colour kRed{0};
inline constexpr Colour kBlue{1};

inline constexpr Colour opposite(Colour c) { return c == kRed ? kBlue : kRed; }

/// "R"/"B" for the two staged colours, the decimal index otherwise.
std::string colour_symbol(Colour c);

/// Largest k with 2^k | m. Throws std::invalid_argument for m < 1.
unsigned two_adic_valuation(std::uint64_t m);

/// The staged 2-colouring. m belongs to stage n = v2(m) + 1, i.e. the class
/// 2^(n-1) mod 2^n. Stage 1 colours 1 red and the other odd numbers blue;
/// stage 2 colours 2 red and the rest of 2 mod 4 blue; stage n >= 3 gives
/// the whole class the opposite colour to n. Throws for m < 1.
Colour staged_colour(std::uint64_t m);

/// Colour of the non-exceptional members of the class 2^(n-1) mod 2^n.
Colour class_colour(std::uint64_t n);

/// Replays the stages 1..stage_limit in order over the values 1..value_limit
/// and returns the colours of 1..value_limit. Throws std::invalid_argument
/// if some value in range is left uncoloured.
std::vector<Colour> stage_simulation(std::uint64_t value_limit, std::uint64_t stage_limit);

struct Staged2Adic {
    friend bool operator==(const Staged2Adic&, const Staged2Adic&) = default;
};

/// colour(m) = exception colour if m is listed, else table[m mod modulus].
class ResidueTable {
public:
    /// Throws std::invalid_argument if modulus is 0, the table does not have
    /// one entry per residue, or an exception value repeats or is < 1.
    ResidueTable(std::uint64_t modulus, std::vector<std::uint32_t> table,
                 std::vector<std::pair<std::uint64_t, std::uint32_t>> exceptions = {});

    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    /// Sorted by value.
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& exceptions() const { return exceptions_; }

    Colour colour(std::uint64_t m) const;

    friend bool operator==(const ResidueTable&, const ResidueTable&) = default;

private:
    std::uint64_t modulus_;
    std::vector<std::uint32_t> table_;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> exceptions_;
};

using ColouringSpec = std::variant<Staged2Adic, ResidueTable>;

/// Throws std::invalid_argument for m < 1.
Colour colour_of(const ColouringSpec& spec, std::uint64_t m);

} // namespace ipr
