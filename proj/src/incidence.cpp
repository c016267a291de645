#include "zetacomp/incidence.hpp"

#include <algorithm>

namespace zetacomp {

namespace {

/* Row-vector times the strict relation: out[j] = sum_i v[i] * N[i][j].
   O(n^2) per step, which keeps the census linear-algebra route usable for
   the matrix sizes the CLI permits. */
std::vector<Int> step_through_strict(const std::vector<Int>& v, const IntMatrix& strict)
{
    const int n = strict.rows();
    std::vector<Int> out(static_cast<std::size_t>(n), Int(0));
    for (int i = 0; i < n; ++i) {
        const Int& vi = v[static_cast<std::size_t>(i)];
        if (vi == 0)
            continue;
        for (int j = 0; j < n; ++j)
            if (strict.at(i, j) != 0)
                out[static_cast<std::size_t>(j)] += vi * strict.at(i, j);
    }
    return out;
}

IdentityRecord make_record(std::string name, std::string lhs, std::string rhs)
{
    IdentityRecord rec;
    rec.pass = lhs == rhs;
    rec.name = std::move(name);
    rec.lhs = std::move(lhs);
    rec.rhs = std::move(rhs);
    return rec;
}

IdentityRecord int_record(std::string name, const Int& lhs, const Int& rhs)
{
    return make_record(std::move(name), lhs.get_str(), rhs.get_str());
}

IdentityRecord poly_record(std::string name, const IntPolynomial& lhs, const IntPolynomial& rhs)
{
    return make_record(std::move(name), coeff_string(lhs), coeff_string(rhs));
}

} // namespace

int VerificationReport::passed() const
{
    return static_cast<int>(std::count_if(identities.begin(), identities.end(),
                                          [](const IdentityRecord& r) { return r.pass; }));
}

int VerificationReport::failed() const
{
    return static_cast<int>(identities.size()) - passed();
}

IntMatrix zeta_matrix(const Poset& p)
{
    const int n = p.size();
    IntMatrix z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j))
                z.at(i, j) = 1;
    return z;
}

IntMatrix complement_matrix(const Poset& p)
{
    const int n = p.size();
    IntMatrix zbar(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!p.leq(i, j))
                zbar.at(i, j) = 1;
    return zbar;
}

IntMatrix strict_matrix(const Poset& p)
{
    const int n = p.size();
    IntMatrix strict(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.less(i, j))
                strict.at(i, j) = 1;
    return strict;
}

IntMatrix mobius_matrix(const Poset& p)
{
    const int n = p.size();
    const IntMatrix strict = strict_matrix(p);

    // Finite Neumann series: (I + N)^{-1} = I - N + N^2 - ...; the powers
    // die out at the nilpotency index, which is the height plus one.
    IntMatrix result = IntMatrix::identity(n);
    IntMatrix power = strict;
    int sign = -1;
    for (int k = 1; k < n && !power.is_zero(); ++k) {
        result = sign > 0 ? result + power : result - power;
        power = power * strict;
        sign = -sign;
    }
    return result;
}

ChainCensus chain_counts(const Poset& p)
{
    const int n = p.size();
    ChainCensus census;
    census.counts.assign(static_cast<std::size_t>(n), Int(0));
    if (n == 0)
        return census;

    const IntMatrix strict = strict_matrix(p);
    std::vector<Int> v(static_cast<std::size_t>(n), Int(1)); // 1^T N^0
    census.counts[0] = n;
    for (int k = 1; k < n; ++k) {
        v = step_through_strict(v, strict);
        Int total = 0;
        for (const Int& e : v)
            total += e;
        if (total == 0)
            break; // no chains at this length or beyond
        census.counts[static_cast<std::size_t>(k)] = std::move(total);
    }
    return census;
}

Int euler_char_chains(const Poset& p)
{
    const ChainCensus census = chain_counts(p);
    Int chi = 0;
    for (std::size_t k = 0; k < census.counts.size(); ++k)
        chi += alt_sign(static_cast<long>(k)) * census.counts[k];
    return chi;
}

Int euler_char_mobius(const Poset& p)
{
    return mobius_matrix(p).sum();
}

Int reduced_euler_char(const Poset& p)
{
    return euler_char_chains(p) - 1;
}

IntPolynomial charpoly_formula(const Poset& p)
{
    const int n = p.size();
    const ChainCensus census = chain_counts(p);
    const auto binom = binomial_rows(n);

    // p(lambda) = (-1)^n (lambda+1)^n - sum_k (-1)^{k+n} c_k (lambda+1)^{n-1-k},
    // expanded coefficient-wise through the binomial rows.
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
    const int lead_sign = alt_sign(n);
    for (int i = 0; i <= n; ++i)
        coeffs[static_cast<std::size_t>(i)] = lead_sign * binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) {
        const Int& ck = census.counts[static_cast<std::size_t>(k)];
        if (ck == 0)
            continue;
        const int term_sign = alt_sign(k + n);
        const int power = n - 1 - k;
        for (int i = 0; i <= power; ++i)
            coeffs[static_cast<std::size_t>(i)] -=
                term_sign * ck * binom[static_cast<std::size_t>(power)][static_cast<std::size_t>(i)];
    }
    return IntPolynomial(std::move(coeffs));
}

Int det_complement_direct(const Poset& p)
{
    return determinant(complement_matrix(p));
}

Int det_complement_via_theorem(const Poset& p)
{
    return alt_sign(p.size() + 1) * reduced_euler_char(p);
}

std::vector<IdentityRecord> spectral_checks(const Poset& p)
{
    const int n = p.size();
    const IntPolynomial complement_poly = charpoly(complement_matrix(p));

    std::vector<IdentityRecord> records;

    // (a) Eigenvalue sum as a coefficient fact: the lambda^{n-1} coefficient
    // of det(Zbar - lambda I) is (-1)^{n-1} tr(Zbar), and the trace is 0.
    if (n >= 1)
        records.push_back(int_record("spectral_a_eigensum_coeff", complement_poly.coeff(n - 1), Int(0)));

    // (b) With an extremum the complement matrix has a zero column (maximum)
    // or zero row (minimum); Laplace expansion there deflates the polynomial.
    // Run at the maximum when both exist.
    auto extremum = find_maximum(p);
    if (!extremum)
        extremum = find_minimum(p);
    if (extremum) {
        records.push_back(int_record("spectral_b_constant_coeff", complement_poly.coeff(0), Int(0)));
        const Poset reduced = remove_element(p, *extremum);
        const IntPolynomial deflated =
            IntPolynomial::monomial(Int(-1), 1) * charpoly(complement_matrix(reduced));
        records.push_back(poly_record("spectral_b_deflation", complement_poly, deflated));
    }

    // (c) Total orders: the only eigenvalue is 0.
    if (is_total_order(p))
        records.push_back(poly_record("spectral_c_total_order", complement_poly,
                                      IntPolynomial::monomial(Int(alt_sign(n)), n)));

    return records;
}

VerificationReport verify_theorem(const Poset& p, int oracle_guard, const std::string& poset_name)
{
    const int n = p.size();
    VerificationReport report;
    report.poset_name = poset_name;
    report.n = n;

    const IntMatrix zeta = zeta_matrix(p);
    const IntMatrix complement = complement_matrix(p);
    const ChainCensus census = chain_counts(p);

    const Int chi_chains = euler_char_chains(p);
    const Int chi_mobius = euler_char_mobius(p);
    const IntPolynomial complement_poly = charpoly(complement);
    const IntPolynomial formula_poly = charpoly_formula(p);
    const Int det_direct = determinant(complement);
    const Int det_theorem = alt_sign(n + 1) * (chi_chains - 1);

    report.chi = chi_chains;
    report.chi_reduced = chi_chains - 1;
    report.det_complement = det_direct;

    auto& ids = report.identities;
    ids.push_back(int_record("det_zeta", determinant(zeta), Int(1)));
    ids.push_back(poly_record("zeta_charpoly", charpoly(zeta),
                              IntPolynomial::binomial_power(Int(1), Int(-1), n))); // (1 - lambda)^n
    ids.push_back(int_record("trace_complement", complement.trace(), Int(0)));
    ids.push_back(int_record("euler_chains_vs_mobius", chi_chains, chi_mobius));

    if (n <= oracle_guard) {
        const oracle::OracleCensus truth = oracle::enumerate_chains(p, oracle_guard);
        Int chi_oracle = 0;
        for (std::size_t k = 0; k < truth.counts.size(); ++k)
            chi_oracle += alt_sign(static_cast<long>(k)) * truth.counts[k];
        ids.push_back(int_record("euler_vs_oracle", chi_chains, chi_oracle));
        ids.push_back(make_record("census_vs_oracle", census_string(census),
                                  census_string(ChainCensus{truth.counts})));
    }

    ids.push_back(poly_record("charpoly_formula_vs_direct", formula_poly, complement_poly));
    ids.push_back(int_record("det_direct_vs_theorem", det_direct, det_theorem));
    ids.push_back(int_record("det_vs_charpoly_eval", det_direct, complement_poly.eval(Int(0))));

    for (auto& rec : spectral_checks(p))
        ids.push_back(std::move(rec));

    return report;
}

std::string census_string(const ChainCensus& census)
{
    std::string out = "[";
    for (std::size_t k = 0; k < census.counts.size(); ++k) {
        if (k > 0)
            out += ", ";
        out += census.counts[k].get_str();
    }
    out += "]";
    return out;
}

} // namespace zetacomp
