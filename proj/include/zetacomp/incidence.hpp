#ifndef ZETACOMP_INCIDENCE_HPP
#define ZETACOMP_INCIDENCE_HPP

#include <string>
#include <vector>

#include "zetacomp/chain_oracle.hpp"
#include "zetacomp/exact_linalg.hpp"
#include "zetacomp/poset.hpp"

namespace zetacomp {

/* Chain counts by length: counts[k] = number of chains with k strict steps,
   for k = 0..n-1. counts[0] = n, and everything at or beyond the poset
   height is zero. */
struct ChainCensus {
    std::vector<Int> counts;

    bool operator==(const ChainCensus&) const = default;
};

struct IdentityRecord {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

/* Pass/fail record of every identity checked on one poset. Comparisons are
   exact; a failed identity means an implementation defect, never a
   tolerance issue. */
struct VerificationReport {
    std::string poset_name;
    int n = 0;
    Int chi;
    Int chi_reduced;
    Int det_complement;
    std::vector<IdentityRecord> identities;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
};

/* Z: entry (i, j) is 1 iff x_i <= x_j. */
IntMatrix zeta_matrix(const Poset& p);

/* Complement of the order relation: J - Z, entry 1 exactly where <= fails. */
IntMatrix complement_matrix(const Poset& p);

/* N = Z - I, the strict relation; nilpotent. */
IntMatrix strict_matrix(const Poset& p);

/* Inverse of Z via the finite Neumann series sum_k (-N)^k. Entries form the
   Mobius function of the poset. */
IntMatrix mobius_matrix(const Poset& p);

/* c_k = 1^T N^k 1 computed by repeated row-vector products. */
ChainCensus chain_counts(const Poset& p);

/* chi(P) = c_0 - c_1 + c_2 - ... */
Int euler_char_chains(const Poset& p);

/* chi(P) as the sum of all Mobius matrix entries. */
Int euler_char_mobius(const Poset& p);

/* chi(P) - 1. */
Int reduced_euler_char(const Poset& p);

/* Closed form of the characteristic polynomial of the complement matrix,
   assembled from chain counts and binomial expansions of (lambda+1)^m:
       p(lambda) = (-1)^n (lambda+1)^n
                   - sum_{k=0}^{n-1} (-1)^{k+n} c_k (lambda+1)^{n-1-k}.
   Must agree coefficient-for-coefficient with charpoly(complement_matrix). */
IntPolynomial charpoly_formula(const Poset& p);

/* det(J - Z) through Bareiss elimination. */
Int det_complement_direct(const Poset& p);

/* (-1)^{n+1} * (chi(P) - 1); must equal the direct determinant. */
Int det_complement_via_theorem(const Poset& p);

/* Spectrum statements checked as exact polynomial identities:
   (a) the eigenvalue sum vanishes (the lambda^{n-1} coefficient),
   (b) with a maximum or minimum x: the constant coefficient vanishes and
       charpoly(J - Z) = (-lambda) * charpoly of the complement of P - {x},
   (c) a total order has charpoly (-lambda)^n. */
std::vector<IdentityRecord> spectral_checks(const Poset& p);

/* Every identity on one poset. Oracle-based rows are included only when
   n fits under the enumeration guard; everything else is unconditional. */
VerificationReport verify_theorem(const Poset& p, int oracle_guard = oracle::kDefaultSizeGuard,
                                  const std::string& poset_name = "");

std::string census_string(const ChainCensus& census);

} // namespace zetacomp

#endif
