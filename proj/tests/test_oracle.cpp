#include <doctest.h>

#include <cstdint>

#include "zetacomp/chain_oracle.hpp"
#include "zetacomp/errors.hpp"
#include "zetacomp/generators.hpp"
#include "zetacomp/poset.hpp"

using namespace zetacomp;

TEST_CASE("census of an antichain is singletons only")
{
    const auto census = oracle::enumerate_chains(antichain(3));
    CHECK(census.counts == std::vector<Int>{3, 0, 0});
    CHECK(census.total == 3);
}

TEST_CASE("census of a chain is binomial")
{
    const auto census = oracle::enumerate_chains(chain(3));
    CHECK(census.counts == std::vector<Int>{3, 3, 1});
    CHECK(census.total == 7); // 2^3 - 1 nonempty subsets
}

TEST_CASE("census of the 4-element boolean lattice")
{
    const auto census = oracle::enumerate_chains(boolean_lattice(2));
    CHECK(census.counts == std::vector<Int>{4, 5, 2, 0});
    CHECK(oracle::euler_char_oracle(boolean_lattice(2)) == 1);
}

TEST_CASE("census of two disjoint 2-chains")
{
    PosetSpec spec;
    spec.names = {"a", "b", "c", "d"};
    spec.pairs = {{"a", "b"}, {"c", "d"}};
    const Poset p = build(spec);
    const auto census = oracle::enumerate_chains(p);
    CHECK(census.counts == std::vector<Int>{4, 2, 0, 0});
    CHECK(oracle::euler_char_oracle(p) == 2);
}

TEST_CASE("oracle Euler characteristic of chains is 1")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(oracle::euler_char_oracle(chain(n)) == 1);
    CHECK(oracle::euler_char_oracle(chain(0)) == 0);
}

TEST_CASE("size guard throws and can be overridden")
{
    const Poset big = antichain(15);
    CHECK_THROWS_AS(oracle::enumerate_chains(big), SizeGuardError);
    CHECK(oracle::enumerate_chains(big, 15).counts[0] == 15);
}

TEST_CASE("parallel and serial enumeration agree")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Poset p = random_poset(11, 0.35, seed);
        CHECK(oracle::enumerate_chains(p) == oracle::enumerate_chains_serial(p));
    }
    CHECK(oracle::enumerate_chains(chain(12)) == oracle::enumerate_chains_serial(chain(12)));
}
