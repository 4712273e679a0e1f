// Times the parallel kernels against their serial reference twins and
// checks that both produce identical results. Run with OMP_NUM_THREADS set
// to vary the thread count.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "mwscp/instances.hpp"
#include "mwscp/lp.hpp"
#include "mwscp/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mwscp;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    int n = 12, m = 6, trials = 20000;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) m = std::atoi(argv[2]);
    if (argc > 3) trials = std::atoi(argv[3]);

    std::printf("threads: %d\n\n", threads());
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial_ms", "parallel_ms",
                "speedup");

    {
        RandomInstanceParams params;
        params.x_span = 30.0;
        const ProblemInstance inst = gen_random(n, m, 42, params);

        const double t0 = now_ms();
        const OracleResult serial = brute_force_separated_serial(inst, 1ULL << 62);
        const double t1 = now_ms();
        const OracleResult parallel = brute_force_separated(inst, 1ULL << 62);
        const double t2 = now_ms();

        if (serial.weight != parallel.weight ||
            serial.deployment.start != parallel.deployment.start) {
            std::fprintf(stderr, "oracle kernels disagree!\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "oracle N=%d M=%d", n, m);
        std::printf("%-28s %12.1f %12.1f %7.2fx\n", label, t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1));
    }

    {
        const ProblemInstance inst = gen_random(10, 3, 7);
        const LpSolution lp = solve_lp(build_lp(inst));

        const double t0 = now_ms();
        double serial_sum = 0.0;
        for (int t = 0; t < trials; ++t)
            serial_sum += randomized_round(inst, lp, 1000 + t).weight;
        const double serial_mean = serial_sum / trials;
        const double t1 = now_ms();
        const double parallel_mean = mean_randomized_weight(inst, lp, 1000, trials);
        const double t2 = now_ms();

        if (serial_mean != parallel_mean) {
            std::fprintf(stderr, "trial kernels disagree: %.17g vs %.17g\n",
                         serial_mean, parallel_mean);
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof label, "rounding trials x%d", trials);
        std::printf("%-28s %12.1f %12.1f %7.2fx\n", label, t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1));
    }

    std::printf("\nresults identical across kernels\n");
    return 0;
}
