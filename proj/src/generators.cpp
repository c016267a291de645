#include "zetacomp/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "zetacomp/errors.hpp"

namespace zetacomp {

namespace {

std::size_t idx(int i, int j, int n)
{
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

std::vector<std::string> numbered_names(int n)
{
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

void require_nonnegative(int n, const char* what)
{
    if (n < 0)
        throw std::invalid_argument(std::string(what) + " size must be nonnegative");
}

/* Uniform draw from [0, bound) by rejection; unbiased and reproducible. */
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

/* Bernoulli(density) from the top 53 bits of the stream. */
bool draw_bernoulli(std::mt19937_64& rng, double density)
{
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < density;
}

} // namespace

Poset chain(int n)
{
    require_nonnegative(n, "chain");
    std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            table[idx(i, j, n)] = 1;
    return Poset::from_leq(numbered_names(n), std::move(table));
}

Poset antichain(int n)
{
    require_nonnegative(n, "antichain");
    std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        table[idx(i, i, n)] = 1;
    return Poset::from_leq(numbered_names(n), std::move(table));
}

Poset boolean_lattice(int k)
{
    require_nonnegative(k, "boolean lattice");
    if (k > 13)
        throw SizeGuardError("boolean lattice with 2^" + std::to_string(k) +
                             " elements exceeds the supported size");

    const int n = 1 << k;
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::string s = "{";
        for (int bit = 0; bit < k; ++bit)
            if (a & (1 << bit)) {
                if (s.size() > 1)
                    s += ",";
                s += std::to_string(bit + 1);
            }
        s += "}";
        names.push_back(std::move(s));
    }

    std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[idx(a, b, n)] = ((a & ~b) == 0) ? 1 : 0; // subset test
    return Poset::from_leq(std::move(names), std::move(table));
}

Poset divisor_poset(long long m)
{
    if (m < 1)
        throw std::invalid_argument("divisor poset requires m >= 1");

    std::vector<long long> divisors;
    for (long long d = 1; d * d <= m; ++d)
        if (m % d == 0) {
            divisors.push_back(d);
            if (d != m / d)
                divisors.push_back(m / d);
        }
    std::sort(divisors.begin(), divisors.end());

    const int n = static_cast<int>(divisors.size());
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (long long d : divisors)
        names.push_back(std::to_string(d));

    std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[idx(i, j, n)] =
                (divisors[static_cast<std::size_t>(j)] % divisors[static_cast<std::size_t>(i)] == 0) ? 1 : 0;
    return Poset::from_leq(std::move(names), std::move(table));
}

Poset random_poset(int n, double density, std::uint64_t seed)
{
    require_nonnegative(n, "random poset");
    if (!(density >= 0.0 && density <= 1.0))
        throw std::invalid_argument("density must lie in [0, 1]");

    std::mt19937_64 rng(seed);

    // Strict relation above the diagonal, drawn row-major.
    std::vector<std::uint8_t> strict(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            strict[idx(i, j, n)] = draw_bernoulli(rng, density) ? 1 : 0;

    // Fisher-Yates relabeling from the same stream hides the triangular shape.
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }

    PosetSpec spec;
    spec.names = numbered_names(n);
    spec.mode = RelationMode::relations;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (strict[idx(i, j, n)])
                spec.pairs.emplace_back("x" + std::to_string(perm[static_cast<std::size_t>(i)]),
                                        "x" + std::to_string(perm[static_cast<std::size_t>(j)]));
    return build(spec);
}

std::vector<Poset> all_labeled_posets(int n)
{
    require_nonnegative(n, "exhaustive enumeration");
    if (n > kMaxExhaustiveN)
        throw SizeGuardError("exhaustive enumeration is guarded at n <= " +
                             std::to_string(kMaxExhaustiveN) + " (got n=" + std::to_string(n) + ")");

    /* Walk every strict relation on n labeled points as a bitmask over the
       n(n-1) ordered pairs, keep the ones that are antisymmetric and
       transitive, and emit them in mask order. Reflexivity is added when the
       table is materialized. */
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pairs.emplace_back(i, j);
    const int bits = static_cast<int>(pairs.size());

    std::vector<Poset> result;
    const auto names = numbered_names(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        // Row bitmasks of the strict relation.
        unsigned row[kMaxExhaustiveN] = {};
        for (int b = 0; b < bits; ++b)
            if (mask & (std::uint64_t{1} << b))
                row[pairs[static_cast<std::size_t>(b)].first] |=
                    1u << pairs[static_cast<std::size_t>(b)].second;

        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (row[i] & (1u << j)) {
                    if (row[j] & (1u << i))
                        ok = false; // antisymmetry
                    else if (row[j] & ~row[i])
                        ok = false; // transitivity
                }
        if (!ok)
            continue;

        std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            table[idx(i, i, n)] = 1;
            for (int j = 0; j < n; ++j)
                if (row[i] & (1u << j))
                    table[idx(i, j, n)] = 1;
        }
        result.push_back(Poset::from_leq(names, std::move(table)));
    }
    return result;
}

} // namespace zetacomp
