#ifndef ZETACOMP_EXACT_LINALG_HPP
#define ZETACOMP_EXACT_LINALG_HPP

#include <string>
#include <vector>

#include "zetacomp/bigint.hpp"

namespace zetacomp {

/* Dense matrix of GMP integers, row-major. All operations are exact. */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    {
    }

    static IntMatrix identity(int n);
    static IntMatrix all_ones(int n); // J = 1 1^T

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(int i, int j)
    {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                        static_cast<std::size_t>(j)];
    }
    const Int& at(int i, int j) const
    {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                        static_cast<std::size_t>(j)];
    }

    Int trace() const;          // throws NotSquare
    Int sum() const;            // sum of all entries
    bool is_zero() const;

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const Int& scalar);
IntMatrix transpose(const IntMatrix& m);

/* Polynomial with integer coefficients; coefficients_[k] multiplies lambda^k.
   Canonical form never stores trailing zero coefficients, so the zero
   polynomial is the empty coefficient list and degree() is -1 for it. */
class IntPolynomial {
public:
    IntPolynomial() = default; // zero polynomial
    explicit IntPolynomial(std::vector<Int> coefficients);

    static IntPolynomial constant(Int value);
    static IntPolynomial monomial(Int coefficient, int power);
    /* (a + b*lambda)^m expanded with exact binomial coefficients. */
    static IntPolynomial binomial_power(const Int& a, const Int& b, int m);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const Int& coeff(int k) const; // 0 outside the stored range
    const std::vector<Int>& coefficients() const { return coefficients_; }

    Int eval(const Int& x) const; // Horner

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<Int> coefficients_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const Int& scalar);

/* Exact determinant by fraction-free (Bareiss) elimination with row swaps
   on zero pivots. The 0x0 determinant is 1 (empty product). */
Int determinant(const IntMatrix& m); // throws NotSquare

/* Characteristic polynomial in the det(M - lambda*I) convention: degree n,
   leading coefficient (-1)^n, computed by the division-free Berkowitz
   algorithm (whose natural det(lambda*I - M) output is sign-adjusted). */
IntPolynomial charpoly(const IntMatrix& m); // throws NotSquare

/* True iff M^n = 0 for the n x n matrix M. */
bool is_nilpotent(const IntMatrix& m); // throws NotSquare

/* Renderings used by the CLI: matrices as rows of space-separated integers,
   polynomials as a lowest-degree-first coefficient list and as a readable
   lambda form. */
std::string to_string(const IntMatrix& m);
std::string coeff_string(const IntPolynomial& p);
std::string lambda_string(const IntPolynomial& p);

/* Pascal triangle rows 0..max_row of exact binomials, C(m, i) = rows[m][i]. */
std::vector<std::vector<Int>> binomial_rows(int max_row);

} // namespace zetacomp

#endif
