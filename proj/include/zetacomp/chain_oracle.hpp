#ifndef ZETACOMP_CHAIN_ORACLE_HPP
#define ZETACOMP_CHAIN_ORACLE_HPP

#include <vector>

#include "zetacomp/bigint.hpp"
#include "zetacomp/poset.hpp"

/* Ground truth for chain counts, obtained by enumerating every strict chain
   of the poset directly. This module deliberately consumes nothing but the
   order relation -- no matrices, no polynomial algebra -- so it stays an
   independent check on the incidence-algebra routes. */

namespace zetacomp::oracle {

/* Worst case (a total order) has 2^n - 1 chains; 14 keeps runs instant. */
inline constexpr int kDefaultSizeGuard = 14;

struct OracleCensus {
    std::vector<Int> counts; // counts[k] = chains with k strict steps; length n
    Int total;               // all nonempty chains

    bool operator==(const OracleCensus&) const = default;
};

/* Depth-first chain extension: start from each singleton and extend only by
   elements strictly above the current top, so every chain is built exactly
   once in its increasing order. Throws SizeGuardError when n > size_guard. */
OracleCensus enumerate_chains(const Poset& p, int size_guard = kDefaultSizeGuard);

/* Single-threaded flavor kept as the reference for the parallel one. */
OracleCensus enumerate_chains_serial(const Poset& p, int size_guard = kDefaultSizeGuard);

/* Alternating sum over the census. */
Int euler_char_oracle(const Poset& p, int size_guard = kDefaultSizeGuard);

} // namespace zetacomp::oracle

#endif
