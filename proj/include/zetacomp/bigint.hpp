#ifndef ZETACOMP_BIGINT_HPP
#define ZETACOMP_BIGINT_HPP

#include <gmpxx.h>
#include <string>

namespace zetacomp {

/* All scalar arithmetic in this project is exact. GMP integers back every
   matrix entry, polynomial coefficient and chain count; nothing ever
   rounds or overflows. */
using Int = mpz_class;

/* Exact quotient. The caller guarantees divisibility (Bareiss updates,
   Neumann-series bookkeeping); mpz_divexact is much faster than mpz_tdiv. */
inline void divide_exact(Int& quotient, const Int& numerator, const Int& denominator)
{
    mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
}

inline std::string to_string(const Int& value)
{
    return value.get_str();
}

/* (-1)^k as a plain int, used all over the alternating sums. */
inline int alt_sign(long k)
{
    return (k % 2 == 0) ? 1 : -1;
}

} // namespace zetacomp

#endif
