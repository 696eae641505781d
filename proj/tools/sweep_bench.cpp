// Times the serial sweep kernel against the OpenMP one on a synthetic grid
// and checks that both produce bit-identical rows.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bondrisk/risk.hpp"

namespace {

bool rows_identical(const std::vector<bondrisk::SensitivityRow>& a,
                    const std::vector<bondrisk::SensitivityRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bondrisk::SensitivityRow& x = a[i];
        const bondrisk::SensitivityRow& y = b[i];
        if (x.yield != y.yield || x.price_exact != y.price_exact ||
            x.price_dur != y.price_dur || x.price_conv != y.price_conv ||
            x.delta_exact != y.delta_exact || x.delta_dur != y.delta_dur ||
            x.delta_conv != y.delta_conv || x.err_dur != y.err_dur ||
            x.err_conv != y.err_conv)
            return false;
    }
    return true;
}

template <typename F>
double best_of_ms(int repeats, F&& run) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto start = std::chrono::steady_clock::now();
        run();
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (ms < best) best = ms;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int points = argc > 1 ? std::atoi(argv[1]) : 400000;
    const int periods = argc > 2 ? std::atoi(argv[2]) : 30;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;
    if (points < 1 || periods < 1 || repeats < 1) {
        std::fprintf(stderr, "usage: sweep_bench [points] [periods] [repeats]\n");
        return 2;
    }

    const bondrisk::AmortizingBondSpec spec{"BENCH", 100.0, 0.02, periods};
    const double anchor = 0.0377;
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double lo = 0.001;
    const double hi = 0.15;
    const double step = points > 1 ? (hi - lo) / (points - 1) : 0.0;
    for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo + step * i;

    std::vector<bondrisk::SensitivityRow> serial_rows;
    std::vector<bondrisk::SensitivityRow> parallel_rows;
    const double serial_ms = best_of_ms(
        repeats, [&] { serial_rows = bondrisk::sensitivity_sweep_serial(spec, anchor, grid); });
    const double parallel_ms =
        best_of_ms(repeats, [&] { parallel_rows = bondrisk::sensitivity_sweep(spec, anchor, grid); });

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    const bool identical = rows_identical(serial_rows, parallel_rows);
    std::printf("points      : %d\n", points);
    std::printf("periods     : %d\n", periods);
    std::printf("threads     : %d\n", threads);
    std::printf("serial      : %.2f ms\n", serial_ms);
    std::printf("parallel    : %.2f ms\n", parallel_ms);
    std::printf("speedup     : %.2fx\n", serial_ms / parallel_ms);
    std::printf("identical   : %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
