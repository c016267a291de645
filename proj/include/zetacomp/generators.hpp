#ifndef ZETACOMP_GENERATORS_HPP
#define ZETACOMP_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "zetacomp/poset.hpp"

namespace zetacomp {

/* Standard test families. Every generator returns a validated poset and is
   a pure function of its arguments. */

Poset chain(int n);     // total order x0 < x1 < ... < x_{n-1}
Poset antichain(int n); // no comparable pairs

/* Subsets of a k-element set ordered by inclusion; 2^k elements. */
Poset boolean_lattice(int k);

/* Divisors of m ordered by divisibility. */
Poset divisor_poset(long long m);

/* Strictly-upper-triangular Bernoulli(density) relation drawn from a seeded
   mt19937_64 stream, relabeled by a random permutation from the same stream,
   then closed transitively. Bit-reproducible for a fixed seed. */
Poset random_poset(int n, double density, std::uint64_t seed);

/* Identifier of the pseudo-random source, recorded in machine output. */
inline constexpr const char* kRngId = "mt19937_64";

/* Every relation table on n labeled points satisfying the order axioms,
   each exactly once, in a fixed deterministic order. Guarded: the count
   grows super-exponentially (1, 1, 3, 19, 219, 4231 for n = 0..5). */
std::vector<Poset> all_labeled_posets(int n);

inline constexpr int kMaxExhaustiveN = 5;

} // namespace zetacomp

#endif
