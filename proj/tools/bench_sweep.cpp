// Benchmark: serial vs OpenMP parameter sweep over the rho2 family.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tristate/catalog.hpp"
#include "tristate/sweep.hpp"

using namespace tristate;

namespace {

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int steps = 20001;
    std::string family = "rho2";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--steps" && i + 1 < argc)
            steps = std::atoi(argv[++i]);
        else if (arg == "--family" && i + 1 < argc)
            family = argv[++i];
        else {
            std::fprintf(stderr, "usage: bench_sweep [--steps N] [--family id]\n");
            return 2;
        }
    }
    const CatalogEntry* e = find_entry(family);
    if (!e || !e->needs_b) {
        std::fprintf(stderr, "not a b-parameterized family: %s\n", family.c_str());
        return 2;
    }

    const auto bs = linspace(0.0, 1.0, steps);
    std::vector<SweepRow> serial, parallel;
    const double ts = timed([&] { serial = sweep_serial(e->make_state, bs); });
    const double tp = timed([&] { parallel = sweep_parallel(e->make_state, bs); });

    double max_diff = 0.0;
    for (int i = 0; i < steps; ++i) {
        max_diff = std::max(max_diff, std::abs(serial[i].lmin_a - parallel[i].lmin_a));
        max_diff = std::max(max_diff, std::abs(serial[i].lmin_b - parallel[i].lmin_b));
        max_diff = std::max(max_diff, std::abs(serial[i].lmin_c - parallel[i].lmin_c));
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("family %s, %d points\n", family.c_str(), steps);
    std::printf("serial:   %8.3f s  (%.0f rows/s)\n", ts, steps / ts);
    std::printf("parallel: %8.3f s  (%.0f rows/s, %d threads)\n", tp, steps / tp, threads);
    std::printf("speedup:  %.2fx\n", ts / tp);
    std::printf("max |serial - parallel|: %g\n", max_diff);
    return max_diff == 0.0 ? 0 : 1;
}
