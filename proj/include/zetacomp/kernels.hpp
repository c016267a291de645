#ifndef ZETACOMP_KERNELS_HPP
#define ZETACOMP_KERNELS_HPP

#include <vector>

#include "zetacomp/exact_linalg.hpp"

/* The three heavy kernels behind the exact_linalg surface, each in a serial
   and an OpenMP flavor. The serial versions are the reference: tests compare
   the two flavors entry-for-entry, and the bench tool times them against
   each other. Dispatchers pick the OpenMP path once the work is large enough
   to amortize the fork-join overhead. */

namespace zetacomp::kernels {

/* Smallest dimension at which the OpenMP paths take over. */
inline constexpr int kParallelCutoff = 64;

IntMatrix matmul_serial(const IntMatrix& a, const IntMatrix& b);
IntMatrix matmul_omp(const IntMatrix& a, const IntMatrix& b);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/* Fraction-free elimination; consumes its working copy. */
Int bareiss_determinant_serial(IntMatrix work);
Int bareiss_determinant_omp(IntMatrix work);
Int bareiss_determinant(IntMatrix work);

/* Monic characteristic polynomial det(lambda*I - M), coefficients returned
   lowest-degree-first, length n + 1. Division-free. */
std::vector<Int> berkowitz_charpoly_serial(const IntMatrix& m);
std::vector<Int> berkowitz_charpoly_omp(const IntMatrix& m);
std::vector<Int> berkowitz_charpoly(const IntMatrix& m);

} // namespace zetacomp::kernels

#endif
