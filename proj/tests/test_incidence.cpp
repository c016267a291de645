#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>

#include "zetacomp/chain_oracle.hpp"
#include "zetacomp/generators.hpp"
#include "zetacomp/incidence.hpp"

using namespace zetacomp;

namespace {

Poset fan_poset()
{
    PosetSpec spec;
    spec.names = {"a", "b", "c"};
    spec.pairs = {{"a", "c"}, {"b", "c"}};
    return build(spec);
}

Poset two_plus_two()
{
    PosetSpec spec;
    spec.names = {"a", "b", "c", "d"};
    spec.pairs = {{"a", "b"}, {"c", "d"}};
    return build(spec);
}

IntPolynomial poly(std::vector<long> coeffs)
{
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

/* The small corpus most properties quantify over. */
std::vector<Poset> property_corpus()
{
    std::vector<Poset> corpus;
    for (int n = 0; n <= 3; ++n)
        for (Poset& p : all_labeled_posets(n))
            corpus.push_back(std::move(p));
    corpus.push_back(fan_poset());
    corpus.push_back(two_plus_two());
    corpus.push_back(boolean_lattice(2));
    corpus.push_back(boolean_lattice(3));
    corpus.push_back(divisor_poset(12));
    corpus.push_back(divisor_poset(30));
    corpus.push_back(chain(7));
    corpus.push_back(antichain(7));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        corpus.push_back(random_poset(9, 0.3, seed));
    return corpus;
}

} // namespace

TEST_CASE("zeta matrix basics")
{
    CHECK(zeta_matrix(antichain(2)) == IntMatrix::identity(2));
    IntMatrix expected(2, 2);
    expected.at(0, 0) = 1;
    expected.at(0, 1) = 1;
    expected.at(1, 1) = 1;
    CHECK(zeta_matrix(chain(2)) == expected);
}

TEST_CASE("complement matrix basics")
{
    IntMatrix swap2(2, 2);
    swap2.at(0, 1) = 1;
    swap2.at(1, 0) = 1;
    CHECK(complement_matrix(antichain(2)) == swap2);

    // chain(n): strictly lower triangular ones under the sorted labels
    const IntMatrix cbar = complement_matrix(chain(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(cbar.at(i, j) == ((i > j) ? 1 : 0));

    CHECK(complement_matrix(chain(4)) == IntMatrix::all_ones(4) - zeta_matrix(chain(4)));
}

TEST_CASE("strict matrix is nilpotent")
{
    CHECK(strict_matrix(antichain(3)).is_zero());
    IntMatrix expected(2, 2);
    expected.at(0, 1) = 1;
    CHECK(strict_matrix(chain(2)) == expected);
    for (const Poset& p : property_corpus())
        CHECK(is_nilpotent(strict_matrix(p)));
}

TEST_CASE("mobius matrix inverts zeta")
{
    CHECK(mobius_matrix(antichain(4)) == IntMatrix::identity(4));
    IntMatrix expected(2, 2);
    expected.at(0, 0) = 1;
    expected.at(0, 1) = -1;
    expected.at(1, 1) = 1;
    CHECK(mobius_matrix(chain(2)) == expected);
    for (const Poset& p : property_corpus())
        CHECK(zeta_matrix(p) * mobius_matrix(p) == IntMatrix::identity(p.size()));
}

TEST_CASE("chain counts match hand values")
{
    CHECK(chain_counts(antichain(3)).counts == std::vector<Int>{3, 0, 0});
    CHECK(chain_counts(chain(3)).counts == std::vector<Int>{3, 3, 1});
    CHECK(chain_counts(fan_poset()).counts == std::vector<Int>{3, 2, 0});
    CHECK(chain_counts(build(PosetSpec{})).counts.empty());
}

TEST_CASE("chain counts equal the brute-force census on the corpus")
{
    for (const Poset& p : property_corpus())
        CHECK(chain_counts(p).counts == oracle::enumerate_chains(p).counts);
}

TEST_CASE("Euler characteristics")
{
    CHECK(euler_char_chains(antichain(3)) == 3);
    for (int n = 1; n <= 8; ++n)
        CHECK(euler_char_chains(chain(n)) == 1);
    CHECK(euler_char_chains(fan_poset()) == 1);
    CHECK(euler_char_chains(chain(0)) == 0);

    CHECK(euler_char_mobius(antichain(3)) == 3);
    CHECK(euler_char_mobius(chain(2)) == 1);

    CHECK(reduced_euler_char(chain(5)) == 0);
    CHECK(reduced_euler_char(antichain(5)) == 4);
    CHECK(reduced_euler_char(boolean_lattice(2)) == 0);
    CHECK(reduced_euler_char(chain(0)) == -1);
}

TEST_CASE("three Euler characteristic routes agree on the corpus")
{
    for (const Poset& p : property_corpus()) {
        const Int chi = euler_char_chains(p);
        CHECK(chi == euler_char_mobius(p));
        CHECK(chi == oracle::euler_char_oracle(p));
    }
}

TEST_CASE("closed-form charpoly matches hand expansions")
{
    CHECK(charpoly_formula(antichain(2)) == poly({-1, 0, 1}));       // lambda^2 - 1
    CHECK(charpoly_formula(build(PosetSpec{{"a"}, {}, {}})) == poly({0, -1})); // -lambda
    for (int n = 0; n <= 8; ++n)
        CHECK(charpoly_formula(chain(n)) == IntPolynomial::monomial(Int(n % 2 == 0 ? 1 : -1), n));
    // fan: (-lambda)(lambda^2 - 1) = -lambda^3 + lambda
    CHECK(charpoly_formula(fan_poset()) == poly({0, 1, 0, -1}));
}

TEST_CASE("closed-form charpoly equals the division-free one on the corpus")
{
    for (const Poset& p : property_corpus())
        CHECK(charpoly_formula(p) == charpoly(complement_matrix(p)));
}

TEST_CASE("determinant of the complement, both routes")
{
    CHECK(det_complement_direct(antichain(3)) == 2);
    CHECK(det_complement_direct(chain(6)) == 0);
    CHECK(det_complement_direct(two_plus_two()) == -1);
    CHECK(det_complement_via_theorem(antichain(2)) == -1);
    CHECK(det_complement_via_theorem(boolean_lattice(2)) == 0);

    for (const Poset& p : property_corpus()) {
        const Int direct = det_complement_direct(p);
        CHECK(direct == det_complement_via_theorem(p));
        CHECK(direct == charpoly(complement_matrix(p)).eval(Int(0)));
    }
}

TEST_CASE("zeta determinant and charpoly on the corpus")
{
    for (const Poset& p : property_corpus()) {
        CHECK(determinant(zeta_matrix(p)) == 1);
        CHECK(charpoly(zeta_matrix(p)) == IntPolynomial::binomial_power(Int(1), Int(-1), p.size()));
        CHECK(complement_matrix(p).trace() == 0);
    }
}

TEST_CASE("spectral checks on families")
{
    // chain(4): charpoly lambda^4, all checks applicable
    for (const auto& rec : spectral_checks(chain(4)))
        CHECK(rec.pass);

    // fan: maximum c, deflation to the antichain {a, b}
    const auto fan_records = spectral_checks(fan_poset());
    REQUIRE(fan_records.size() == 3);
    for (const auto& rec : fan_records)
        CHECK(rec.pass);
    CHECK(charpoly(complement_matrix(fan_poset())) == poly({0, 1, 0, -1}));

    // boolean_lattice(2) has a maximum: constant coefficient 0
    CHECK(charpoly(complement_matrix(boolean_lattice(2))).coeff(0) == 0);

    for (const Poset& p : property_corpus())
        for (const auto& rec : spectral_checks(p))
            CHECK(rec.pass);
}

TEST_CASE("every identity is invariant under relabeling")
{
    std::mt19937_64 rng(2024);
    for (const Poset& p : property_corpus()) {
        const int n = p.size();
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const Poset q = relabel(p, perm);
        CHECK(euler_char_chains(q) == euler_char_chains(p));
        CHECK(chain_counts(q).counts == chain_counts(p).counts);
        CHECK(det_complement_direct(q) == det_complement_direct(p));
        CHECK(charpoly(complement_matrix(q)) == charpoly(complement_matrix(p)));
        CHECK(determinant(zeta_matrix(q)) == 1);
    }
}

TEST_CASE("verify_theorem passes on healthy posets and reports failures honestly")
{
    const VerificationReport report = verify_theorem(chain(5), oracle::kDefaultSizeGuard, "chain:5");
    CHECK(report.all_pass());
    CHECK(report.n == 5);
    CHECK(report.chi == 1);
    CHECK(report.chi_reduced == 0);
    CHECK(report.det_complement == 0);
    CHECK(report.poset_name == "chain:5");
    CHECK(report.passed() == static_cast<int>(report.identities.size()));

    for (const Poset& p : property_corpus())
        CHECK(verify_theorem(p).all_pass());
}

TEST_CASE("verify_theorem omits oracle rows past the guard")
{
    const VerificationReport guarded = verify_theorem(antichain(15), 14);
    for (const auto& rec : guarded.identities) {
        CHECK(rec.name != "euler_vs_oracle");
        CHECK(rec.name != "census_vs_oracle");
    }
    CHECK(guarded.all_pass());

    const VerificationReport full = verify_theorem(antichain(15), 15);
    bool found = false;
    for (const auto& rec : full.identities)
        found = found || rec.name == "census_vs_oracle";
    CHECK(found);
    CHECK(full.all_pass());
}
