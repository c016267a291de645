#ifndef ZETACOMP_CLI_HPP
#define ZETACOMP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "zetacomp/chain_oracle.hpp"

namespace zetacomp::cli {

enum class Command { info, matrices, charpoly, verify, sweep };
enum class Format { plain, machine };
enum class SweepKind { exhaustive, random };

/* Exit status contract: 0 = all checks pass, 1 = a mathematical identity
   failed (an implementation defect -- the identities are theorems),
   2 = input or usage error. */
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::info;

    /* Exactly one of input_file / gen_spec for the per-poset commands.
       gen_spec forms: chain:N, antichain:N, boolean:K, divisor:M, random:N. */
    std::string input_file;
    std::string gen_spec;

    Format format = Format::plain;
    std::uint64_t seed = 1;
    double density = 0.3;
    int size_guard = oracle::kDefaultSizeGuard;
    bool relabel = false; // matrices: render under the linear-extension order

    /* Sweep parameters. Poset i of a random sweep uses seed + i. */
    SweepKind sweep_kind = SweepKind::exhaustive;
    int sweep_n = -1; // -1 = kind default (4 exhaustive, 10 random)
    int count = 100;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace zetacomp::cli

#endif
