#include "ipr/search.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "search_engine.hpp"

namespace ipr {

SearchProblem SearchProblem::from_system(const SystemInstance& system) {
    return SearchProblem{system.matrix, system.variable_labels, system.divisibility};
}

SearchProblem SearchProblem::from_matrix(ExactMatrix matrix, std::vector<BigInt> divisibility) {
    if (divisibility.empty())
        divisibility.assign(matrix.cols(), BigInt(1));
    auto labels = matrix.col_labels();
    return SearchProblem{std::move(matrix), std::move(labels), std::move(divisibility)};
}

namespace {

/// Every colour index the spec can produce.
std::vector<Colour> palette(const ColouringSpec& spec) {
    const auto* table = std::get_if<ResidueTable>(&spec);
    if (!table)
        return {kRed, kBlue};
    std::vector<Colour> out;
    for (auto c : table->table())
        out.push_back(Colour{c});
    for (const auto& e : table->exceptions())
        out.push_back(Colour{e.second});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Variables (other than y) linked through shared rows, with the rows that
/// touch them. Rows touching only y are left in `root_rows`.
struct Blocks {
    std::vector<std::vector<std::size_t>> vars; // ascending within each block
    std::vector<std::vector<std::size_t>> rows;
    std::vector<std::size_t> root_rows;
};

Blocks split_blocks(const detail::CompiledProblem& cp, std::size_t y) {
    std::vector<std::size_t> parent(cp.vars);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<std::optional<std::size_t>> anchor(cp.rows);
    for (std::size_t r = 0; r < cp.rows; ++r) {
        for (std::size_t c = 0; c < cp.vars; ++c) {
            if (c == y || cp.coef[r * cp.vars + c] == 0)
                continue;
            if (!anchor[r])
                anchor[r] = c;
            else
                parent[find(c)] = find(*anchor[r]);
        }
    }

    Blocks out;
    std::vector<std::optional<std::size_t>> block_of_root(cp.vars);
    for (std::size_t v = 0; v < cp.vars; ++v) {
        if (v == y)
            continue;
        auto& slot = block_of_root[find(v)];
        if (!slot) {
            slot = out.vars.size();
            out.vars.emplace_back();
            out.rows.emplace_back();
        }
        out.vars[*slot].push_back(v);
    }
    for (std::size_t r = 0; r < cp.rows; ++r) {
        if (anchor[r])
            out.rows[*block_of_root[find(*anchor[r])]].push_back(r);
        else
            out.root_rows.push_back(r);
    }
    return out;
}

/// Lexicographically first witness with y fixed, or nullopt.
std::optional<std::vector<std::int64_t>> search_fixed_y(const detail::CompiledProblem& cp, const ColouringSpec& spec,
                                                        const Blocks& blocks, const std::vector<Colour>& colours,
                                                        std::size_t y, std::int64_t y_value) {
    std::vector<std::optional<std::int64_t>> preset(cp.vars);
    preset[y] = y_value;

    // rows touching only y decide the colour, if there are any
    std::optional<Colour> forced;
    for (std::size_t r : blocks.root_rows) {
        const std::int64_t v = cp.coef[r * cp.vars + y] * y_value;
        if (v <= 0 || (cp.image_max && v > *cp.image_max))
            return std::nullopt;
        const Colour c = colour_of(spec, static_cast<std::uint64_t>(v));
        if (forced && *forced != c)
            return std::nullopt;
        forced = c;
    }
    const std::vector<Colour> candidates = forced ? std::vector<Colour>{*forced} : colours;

    // the feasible set for a fixed colour is a product over blocks, so its
    // lexicographic minimum is the per-block minimum
    std::optional<std::vector<std::int64_t>> best;
    for (const Colour colour : candidates) {
        std::vector<std::int64_t> values(cp.vars, 0);
        values[y] = y_value;
        bool feasible = true;
        for (std::size_t b = 0; b < blocks.vars.size() && feasible; ++b) {
            detail::PrunedDfs dfs(cp, spec, blocks.vars[b], preset, blocks.rows[b], colour);
            const auto found = dfs.run();
            if (!found) {
                feasible = false;
                break;
            }
            for (std::size_t v : blocks.vars[b])
                values[v] = (*found)[v];
        }
        if (feasible && (!best || values < *best))
            best = std::move(values);
    }
    return best;
}

} // namespace

SearchOutcome find_monochromatic_image(const SearchProblem& problem, const ColouringSpec& spec,
                                       const SearchBounds& bounds, const SearchOptions& options) {
    const detail::CompiledProblem cp = detail::compile(problem, bounds);
    const std::size_t y = cp.vars - 1;
    const std::int64_t y_step = cp.modulus[y];
    if (y_step == 0)
        return detail::make_exhausted(problem, bounds);

    const Blocks blocks = split_blocks(cp, y);
    const std::vector<Colour> colours = palette(spec);
    const std::int64_t y_count = cp.bound[y] / y_step;
    std::vector<std::optional<std::vector<std::int64_t>>> found(static_cast<std::size_t>(y_count));
    const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t t = 0; t < y_count; ++t)
        found[static_cast<std::size_t>(t)] = search_fixed_y(cp, spec, blocks, colours, y, (t + 1) * y_step);

    // value vectors are in label order with y last, so vector < is the lexicographic order
    const std::vector<std::int64_t>* best = nullptr;
    for (const auto& f : found)
        if (f && (!best || *f < *best))
            best = &*f;
    if (!best)
        return detail::make_exhausted(problem, bounds);
    return detail::make_witness(problem, cp, spec, *best);
}

bool validate_witness(const SearchProblem& problem, const ColouringSpec& spec, const SearchBounds& bounds,
                      const Witness& witness) {
    const ExactMatrix& m = problem.matrix;
    if (witness.assignment.size() != m.cols() || witness.image.size() != m.rows())
        return false;
    std::vector<Rational> x;
    for (std::size_t v = 0; v < m.cols(); ++v) {
        const auto& [label, value] = witness.assignment[v];
        if (label != problem.variable_labels[v] || value < 1)
            return false;
        const std::uint64_t bound = v + 1 == m.cols() ? bounds.y_bound : bounds.var_bound;
        if (static_cast<std::uint64_t>(value) > bound)
            return false;
        const BigInt big(static_cast<long>(value));
        if (big % problem.divisibility[v] != 0)
            return false;
        x.emplace_back(big);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s;
        for (std::size_t c = 0; c < m.cols(); ++c)
            s += m(r, c) * x[c];
        if (s != Rational(static_cast<long>(witness.image[r])) || witness.image[r] < 1)
            return false;
        if (bounds.image_max && static_cast<std::uint64_t>(witness.image[r]) > *bounds.image_max)
            return false;
        if (colour_of(spec, static_cast<std::uint64_t>(witness.image[r])) != witness.colour)
            return false;
    }
    return true;
}

} // namespace ipr
