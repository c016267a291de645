/* Timing comparison of the serial reference kernels against the OpenMP
   flavors, on complement matrices of random posets (0/1 entries, the shape
   the library actually works with). Both flavors must agree exactly; the
   bench aborts if they ever disagree. */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zetacomp/generators.hpp"
#include "zetacomp/incidence.hpp"
#include "zetacomp/kernels.hpp"

using zetacomp::Int;
using zetacomp::IntMatrix;

namespace {

template <typename F>
double best_of(int reps, F&& f)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

void report(const char* kernel, int n, double serial, double parallel)
{
    std::printf("%-22s n=%-5d serial %9.4fs   omp %9.4fs   speedup %5.2fx\n", kernel, n, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

void die(const char* what)
{
    std::fprintf(stderr, "bench: serial and OpenMP results differ in %s\n", what);
    std::exit(1);
}

} // namespace

int main(int argc, char** argv)
{
    int n = 128;
    int reps = 3;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--n" && i + 1 < argc)
            n = std::atoi(argv[++i]);
        else if (arg == "--reps" && i + 1 < argc)
            reps = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--n SIZE] [--reps REPS]\n", argv[0]);
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial code\n");
#endif

    const zetacomp::Poset p = zetacomp::random_poset(n, 0.3, 1);
    const IntMatrix m = zetacomp::complement_matrix(p);

    IntMatrix prod_serial, prod_omp;
    const double t_mm_s = best_of(reps, [&] { prod_serial = zetacomp::kernels::matmul_serial(m, m); });
    const double t_mm_p = best_of(reps, [&] { prod_omp = zetacomp::kernels::matmul_omp(m, m); });
    if (!(prod_serial == prod_omp))
        die("matmul");
    report("matmul", n, t_mm_s, t_mm_p);

    Int det_serial, det_omp;
    const double t_det_s =
        best_of(reps, [&] { det_serial = zetacomp::kernels::bareiss_determinant_serial(m); });
    const double t_det_p =
        best_of(reps, [&] { det_omp = zetacomp::kernels::bareiss_determinant_omp(m); });
    if (det_serial != det_omp)
        die("bareiss_determinant");
    report("bareiss_determinant", n, t_det_s, t_det_p);

    std::vector<Int> cp_serial, cp_omp;
    const double t_cp_s =
        best_of(reps, [&] { cp_serial = zetacomp::kernels::berkowitz_charpoly_serial(m); });
    const double t_cp_p = best_of(reps, [&] { cp_omp = zetacomp::kernels::berkowitz_charpoly_omp(m); });
    if (cp_serial != cp_omp)
        die("berkowitz_charpoly");
    report("berkowitz_charpoly", n, t_cp_s, t_cp_p);

    return 0;
}
