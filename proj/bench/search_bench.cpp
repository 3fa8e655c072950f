// Serial reference vs OpenMP search on the obstruction instances.
//
//   search_bench [max_depth] [var_bound]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "ipr/search.hpp"
#include "ipr/systems.hpp"

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t max_depth = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 3;
    const std::uint64_t var_bound = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 32;
    const ipr::ColouringSpec staged = ipr::Staged2Adic{};

    std::cout << "threads available: " << omp_get_max_threads() << '\n';
    std::cout << "kind depth y_bound var_bound serial_ms parallel_ms agree\n";
    for (std::size_t d = 1; d <= max_depth; ++d) {
        const auto coeffs = ipr::CoefficientSequence::canonical(d);
        for (auto kind : {ipr::SystemKind::PlainX, ipr::SystemKind::ScaledZ}) {
            const auto problem = ipr::SearchProblem::from_system(ipr::build_system(kind, d, coeffs));
            // y up to depth + 1 includes the first y the truncation cannot rule out
            const ipr::SearchBounds bounds{d + 1, var_bound, std::nullopt};
            ipr::SearchOutcome serial;
            ipr::SearchOutcome parallel;
            const double ts = time_ms([&] { serial = ipr::find_monochromatic_image_serial(problem, staged, bounds); });
            const double tp = time_ms([&] { parallel = ipr::find_monochromatic_image(problem, staged, bounds); });
            std::cout << ipr::to_string(kind) << ' ' << d << ' ' << bounds.y_bound << ' ' << var_bound << ' '
                      << ts << ' ' << tp << ' ' << (serial == parallel ? "yes" : "NO") << '\n';
        }
    }
    return 0;
}
