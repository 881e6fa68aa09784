#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "zonodt/closed_form.hpp"
#include "zonodt/corpus.hpp"
#include "zonodt/divisor.hpp"
#include "zonodt/multigraph.hpp"
#include "zonodt/pspace.hpp"

using namespace zonodt;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n",
                name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                same ? "outputs match" : "OUTPUTS DIFFER");
}

} // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    {
        const Multigraph g = Multigraph(6, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 4, 4},
                                            {4, 5, 4}, {0, 5, 4}, {0, 3, 1}});
        std::vector<Divisor> serial, parallel;
        const double ts = time_ms([&] { serial = enumerate_break_divisors_serial(g); });
        const double tp = time_ms([&] { parallel = enumerate_break_divisors(g); });
        report("break divisors", ts, tp, serial == parallel);
    }

    {
        const Multigraph g(4, {{0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {0, 3, 5}});
        std::vector<Divisor> serial, parallel;
        const double ts = time_ms([&] { serial = enumerate_orientable_divisors_serial(g); });
        const double tp = time_ms([&] { parallel = enumerate_orientable_divisors(g); });
        report("orientable divisors", ts, tp, serial == parallel);
    }

    {
        const Multigraph g(4, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2},
                               {2, 3, 2}});
        const SlimSubsets slims = slim_subsets(g);
        std::vector<MultiPoly> polys;
        for (const auto& y : slims.count_vectors) polys.push_back(p_of_edges(g, y));
        GradedDims serial, parallel;
        const double ts = time_ms([&] { serial = graded_rank_serial(polys); });
        const double tp = time_ms([&] { parallel = graded_rank(polys); });
        report("graded rank", ts, tp, serial == parallel);
    }

    {
        long long serial = 0, parallel = 0;
        const Partition lambda{3, 2, 1};
        const double ts = time_ms([&] { serial = dset_orbit_count_serial(3, 6, lambda, 5); });
        const double tp = time_ms([&] { parallel = dset_orbit_count(3, 6, lambda, 5); });
        report("orbit oracle", ts, tp, serial == parallel);
    }

    return 0;
}
