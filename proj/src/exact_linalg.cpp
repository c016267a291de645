#include "zetacomp/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

#include "zetacomp/errors.hpp"
#include "zetacomp/kernels.hpp"

namespace zetacomp {

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

const Int kZero = 0;

} // namespace

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::all_ones(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = 1;
    return m;
}

Int IntMatrix::trace() const
{
    if (!square())
        throw NotSquare("trace of a " + std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    Int t = 0;
    for (int i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

Int IntMatrix::sum() const
{
    Int s = 0;
    for (const Int& e : entries_)
        s += e;
    return s;
}

bool IntMatrix::is_zero() const
{
    for (const Int& e : entries_)
        if (e != 0)
            return false;
    return true;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    require_same_shape(a, b, "add");
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    require_same_shape(a, b, "sub");
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    return kernels::matmul(a, b);
}

IntMatrix operator*(const IntMatrix& a, const Int& scalar)
{
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) * scalar;
    return out;
}

IntMatrix transpose(const IntMatrix& m)
{
    IntMatrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(j, i) = m.at(i, j);
    return out;
}

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : coefficients_(std::move(coefficients))
{
    while (!coefficients_.empty() && coefficients_.back() == 0)
        coefficients_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int value)
{
    std::vector<Int> c;
    if (value != 0)
        c.push_back(std::move(value));
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(Int coefficient, int power)
{
    if (coefficient == 0)
        return IntPolynomial();
    std::vector<Int> c(static_cast<std::size_t>(power) + 1, Int(0));
    c.back() = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::binomial_power(const Int& a, const Int& b, int m)
{
    // (a + b*lambda)^m = sum_i C(m, i) a^(m-i) b^i lambda^i
    std::vector<Int> c(static_cast<std::size_t>(m) + 1);
    Int binom = 1;
    std::vector<Int> apow(static_cast<std::size_t>(m) + 1), bpow(static_cast<std::size_t>(m) + 1);
    apow[0] = 1;
    bpow[0] = 1;
    for (int i = 1; i <= m; ++i) {
        apow[static_cast<std::size_t>(i)] = apow[static_cast<std::size_t>(i) - 1] * a;
        bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i) - 1] * b;
    }
    for (int i = 0; i <= m; ++i) {
        c[static_cast<std::size_t>(i)] =
            binom * apow[static_cast<std::size_t>(m - i)] * bpow[static_cast<std::size_t>(i)];
        if (i < m) {
            binom *= (m - i);
            divide_exact(binom, binom, Int(i + 1));
        }
    }
    return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coefficients_.size()))
        return kZero;
    return coefficients_[static_cast<std::size_t>(k)];
}

Int IntPolynomial::eval(const Int& x) const
{
    Int acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<Int> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<Int> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.degree() < 0 || b.degree() < 0)
        return IntPolynomial();
    std::vector<Int> c(a.coefficients().size() + b.coefficients().size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            c[i + j] += a.coefficients()[i] * b.coefficients()[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const Int& scalar)
{
    std::vector<Int> c(a.coefficients().size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coefficients()[k] * scalar;
    return IntPolynomial(std::move(c));
}

Int determinant(const IntMatrix& m)
{
    if (!m.square())
        throw NotSquare("determinant of a " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    return kernels::bareiss_determinant(m);
}

IntPolynomial charpoly(const IntMatrix& m)
{
    if (!m.square())
        throw NotSquare("charpoly of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " matrix");
    std::vector<Int> monic = kernels::berkowitz_charpoly(m); // det(lambda*I - M)
    if (m.rows() % 2 != 0)
        for (Int& c : monic)
            c = -c;
    return IntPolynomial(std::move(monic)); // det(M - lambda*I)
}

bool is_nilpotent(const IntMatrix& m)
{
    if (!m.square())
        throw NotSquare("nilpotency of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " matrix");
    const int n = m.rows();
    if (n == 0)
        return true;

    // M^n by binary exponentiation; powers of a nilpotent matrix collapse
    // to zero quickly, so bail out as soon as a factor vanishes.
    IntMatrix result = IntMatrix::identity(n);
    IntMatrix base = m;
    int e = n;
    while (e > 0) {
        if (base.is_zero())
            return true;
        if (e & 1)
            result = result * base;
        if (result.is_zero())
            return true;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result.is_zero();
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0)
                out << ' ';
            out << m.at(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

std::string coeff_string(const IntPolynomial& p)
{
    std::string out = "[";
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (k > 0)
            out += ", ";
        out += p.coefficients()[k].get_str();
    }
    out += "]";
    return out;
}

std::string lambda_string(const IntPolynomial& p)
{
    if (p.degree() < 0)
        return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Int& c = p.coeff(k);
        if (c == 0)
            continue;
        const bool first = out.empty();
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1 || k == 0)
            out += mag.get_str();
        if (k >= 1) {
            out += "\xce\xbb"; // lambda
            if (k >= 2)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<std::vector<Int>> binomial_rows(int max_row)
{
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(max_row) + 1);
    for (int m = 0; m <= max_row; ++m) {
        auto& row = rows[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(m) + 1, Int(1));
        for (int i = 1; i < m; ++i)
            row[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(i) - 1] +
                                               rows[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(i)];
    }
    return rows;
}

} // namespace zetacomp
