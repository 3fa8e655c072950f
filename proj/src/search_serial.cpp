#include "ipr/search.hpp"

#include <numeric>

#include "search_engine.hpp"

namespace ipr {

SearchOutcome find_monochromatic_image_serial(const SearchProblem& problem, const ColouringSpec& spec,
                                              const SearchBounds& bounds) {
    const detail::CompiledProblem cp = detail::compile(problem, bounds);
    std::vector<std::size_t> order(cp.vars);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> rows(cp.rows);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    detail::PrunedDfs dfs(cp, spec, std::move(order), std::vector<std::optional<std::int64_t>>(cp.vars), rows);
    if (auto values = dfs.run())
        return detail::make_witness(problem, cp, spec, *values);
    return detail::make_exhausted(problem, bounds);
}

} // namespace ipr
