#include "zetacomp/chain_oracle.hpp"

#include <cstdint>
#include <string>

#include "zetacomp/errors.hpp"

namespace zetacomp::oracle {

namespace {

void check_guard(const Poset& p, int size_guard)
{
    if (p.size() > size_guard)
        throw SizeGuardError("chain enumeration guarded at n <= " + std::to_string(size_guard) +
                             " (got n=" + std::to_string(p.size()) + "); raise --size-guard to override");
}

/* Tally the chain ending at `top` (built with `length` strict steps), then
   extend it by every element strictly above `top`. */
void extend(const Poset& p, int top, int length, std::vector<Int>& counts)
{
    counts[static_cast<std::size_t>(length)] += 1;
    for (int j = 0; j < p.size(); ++j)
        if (p.less(top, j))
            extend(p, j, length + 1, counts);
}

OracleCensus finish(std::vector<Int> counts)
{
    OracleCensus census;
    census.total = 0;
    for (const Int& c : counts)
        census.total += c;
    census.counts = std::move(counts);
    return census;
}

} // namespace

OracleCensus enumerate_chains_serial(const Poset& p, int size_guard)
{
    check_guard(p, size_guard);
    std::vector<Int> counts(static_cast<std::size_t>(p.size()), Int(0));
    for (int root = 0; root < p.size(); ++root)
        extend(p, root, 0, counts);
    return finish(std::move(counts));
}

OracleCensus enumerate_chains(const Poset& p, int size_guard)
{
    check_guard(p, size_guard);
    const int n = p.size();
    std::vector<Int> counts(static_cast<std::size_t>(n), Int(0));

    // Per-root enumeration is independent; merge per-thread tallies at the end.
#pragma omp parallel
    {
        std::vector<Int> local(static_cast<std::size_t>(n), Int(0));
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t root = 0; root < n; ++root)
            extend(p, static_cast<int>(root), 0, local);
#pragma omp critical(zetacomp_oracle_merge)
        for (int k = 0; k < n; ++k)
            counts[static_cast<std::size_t>(k)] += local[static_cast<std::size_t>(k)];
    }
    return finish(std::move(counts));
}

Int euler_char_oracle(const Poset& p, int size_guard)
{
    const OracleCensus census = enumerate_chains(p, size_guard);
    Int chi = 0;
    for (std::size_t k = 0; k < census.counts.size(); ++k)
        chi += alt_sign(static_cast<long>(k)) * census.counts[k];
    return chi;
}

} // namespace zetacomp::oracle
