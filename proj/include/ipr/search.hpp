#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ipr/colouring.hpp"
#include "ipr/matrix.hpp"
#include "ipr/systems.hpp"

namespace ipr {

/// An integer matrix whose columns are variables, with a divisibility
/// modulus per variable. The last column plays the role of `y`: it is
/// bounded by `y_bound`, every other variable by `var_bound`.
struct SearchProblem {
    ExactMatrix matrix;
    std::vector<std::string> variable_labels;
    std::vector<BigInt> divisibility;

    static SearchProblem from_system(const SystemInstance& system);
    /// Labels from the matrix columns; all moduli 1 when `divisibility` is empty.
    static SearchProblem from_matrix(ExactMatrix matrix, std::vector<BigInt> divisibility = {});
};

struct SearchBounds {
    std::uint64_t y_bound = 1;
    std::uint64_t var_bound = 1;
    /// Optional cap on every image entry (used to keep colourings of [1..N] closed).
    std::optional<std::uint64_t> image_max;
};

struct Witness {
    std::vector<std::pair<std::string, std::int64_t>> assignment; // label order, y last
    std::vector<std::int64_t> image;
    Colour colour;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Exhausted {
    std::uint64_t y_bound = 0;
    std::uint64_t var_bound = 0;
    std::optional<std::uint64_t> image_max;
    std::vector<BigInt> divisibility;
    friend bool operator==(const Exhausted&, const Exhausted&) = default;
};

using SearchOutcome = std::variant<Witness, Exhausted>;

inline bool is_witness(const SearchOutcome& o) { return std::holds_alternative<Witness>(o); }

struct SearchOptions {
    int workers = 0; // 0 = OpenMP default
};

/// Exhaustive search for an assignment whose image is positive and
/// monochromatic. Variables range over positive multiples of their modulus
/// up to their bound. Returns the lexicographically first witness (variables
/// in label order, y last), else Exhausted.
///
/// The y range is split across OpenMP threads and per-y results are merged
/// by lexicographic minimum, so every worker count gives the same answer.
///
/// Throws std::invalid_argument for zero bounds, non-integral entries,
/// non-positive moduli, or bounds whose images could overflow 64 bits.
SearchOutcome find_monochromatic_image(const SearchProblem& problem, const ColouringSpec& spec,
                                       const SearchBounds& bounds, const SearchOptions& options = {});

/// Single-threaded reference: one depth-first pass in lexicographic order.
SearchOutcome find_monochromatic_image_serial(const SearchProblem& problem, const ColouringSpec& spec,
                                              const SearchBounds& bounds);

/// Independent re-check of a witness with exact arithmetic: image equals
/// matrix times assignment, entries positive and within bounds, values
/// divisible by their moduli, and every entry has the witness colour.
bool validate_witness(const SearchProblem& problem, const ColouringSpec& spec, const SearchBounds& bounds,
                      const Witness& witness);

} // namespace ipr
