// Compares the OpenMP kernels against the serial reference on the two hot
// paths: exact matrix products and Smith normal forms. Entry growth during
// elimination makes the big-integer work dominate, which is exactly what the
// parallel sweeps target.

#include <cstdio>
#include <random>

#include <omp.h>

#include "thickset/smith.hpp"

using thickset::Int;
using thickset::IntMatrix;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

template <typename F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const double t0 = omp_get_wtime();
        f();
        const double t1 = omp_get_wtime();
        if (t1 - t0 < best)
            best = t1 - t0;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 96;
    std::mt19937_64 rng(20240817);

    std::printf("threads: %d\n\n", omp_get_max_threads());
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial(s)", "openmp(s)", "speedup");

    {
        IntMatrix a = random_matrix(rng, 2 * n, 2 * n, 1000000000L);
        IntMatrix b = random_matrix(rng, 2 * n, 2 * n, 1000000000L);
        // square the entries a few times so limbs pile up
        a = thickset::serial::matrix_product(a, a);
        b = thickset::serial::matrix_product(b, b);
        double ts = time_best_of(3, [&] { (void)thickset::serial::matrix_product(a, b); });
        double tp = time_best_of(3, [&] { (void)thickset::matrix_product(a, b); });
        std::printf("%-28s %10.4f %10.4f %7.2fx\n", "matrix_product", ts, tp, ts / tp);
        if (!(thickset::matrix_product(a, b) == thickset::serial::matrix_product(a, b))) {
            std::printf("MISMATCH in matrix_product\n");
            return 1;
        }
    }

    {
        IntMatrix a = random_matrix(rng, n, n, 40);
        double ts = time_best_of(2, [&] { (void)thickset::serial::smith_normal_form(a); });
        double tp = time_best_of(2, [&] { (void)thickset::smith_normal_form(a); });
        std::printf("%-28s %10.4f %10.4f %7.2fx\n", "smith_normal_form", ts, tp, ts / tp);
        auto ds = thickset::serial::smith_normal_form(a);
        auto dp = thickset::smith_normal_form(a);
        if (!(ds.s == dp.s && ds.u == dp.u && ds.v == dp.v)) {
            std::printf("MISMATCH in smith_normal_form\n");
            return 1;
        }
    }

    return 0;
}
