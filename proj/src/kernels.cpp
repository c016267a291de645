#include "zetacomp/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "zetacomp/errors.hpp"

namespace zetacomp::kernels {

namespace {

void require_multipliable(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

void require_square(const IntMatrix& m)
{
    if (!m.square())
        throw NotSquare("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void matmul_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& out, int i)
{
    for (int k = 0; k < a.cols(); ++k) {
        const Int& aik = a.at(i, k);
        if (aik == 0)
            continue;
        for (int j = 0; j < b.cols(); ++j)
            out.at(i, j) += aik * b.at(k, j);
    }
}

/* One elimination step of Bareiss on rows below the pivot:
   m[i][j] <- (m[i][j]*m[k][k] - m[i][k]*m[k][j]) / prev_pivot, exactly. */
void bareiss_update_row(IntMatrix& m, int k, int i, const Int& pivot, const Int& prev_pivot)
{
    const int n = m.rows();
    Int tmp;
    for (int j = k + 1; j < n; ++j) {
        tmp = m.at(i, j) * pivot - m.at(i, k) * m.at(k, j);
        divide_exact(m.at(i, j), tmp, prev_pivot);
    }
    m.at(i, k) = 0;
}

/* Shared scaffolding of the two Bareiss flavors; only the row loop differs. */
template <typename RowLoop>
Int bareiss_run(IntMatrix work, RowLoop&& eliminate_rows)
{
    require_square(work);
    const int n = work.rows();
    if (n == 0)
        return 1;

    int sign = 1;
    Int prev_pivot = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (work.at(k, k) == 0) {
            // Zero rows/columns are common here (complement matrices of
            // posets with extrema), so the degenerate path matters.
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (work.at(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row == -1)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(work.at(k, j), work.at(swap_row, j));
            sign = -sign;
        }
        eliminate_rows(work, k, prev_pivot);
        prev_pivot = work.at(k, k);
    }
    return sign > 0 ? work.at(n - 1, n - 1) : -work.at(n - 1, n - 1);
}

/* Berkowitz iteration: extend the characteristic polynomial of the leading
   principal (k-1)x(k-1) submatrix to the k x k one by multiplying with the
   lower-triangular Toeplitz matrix whose first column is
       (1, -a, -R S, -R M S, -R M^2 S, ...),
   where a = m[k-1][k-1], R is the row to the left of a, S the column above
   it, and M the leading (k-1)x(k-1) block. Coefficients are kept
   highest-degree-first while iterating. Everything stays in integers.
   The matvec hook lets the OpenMP flavor parallelize v <- M v. */
template <typename Matvec>
std::vector<Int> berkowitz_run(const IntMatrix& m, Matvec&& matvec)
{
    require_square(m);
    const int n = m.rows();

    std::vector<Int> c{1};
    std::vector<Int> toeplitz, next, v, vnext;
    for (int k = 1; k <= n; ++k) {
        toeplitz.assign(static_cast<std::size_t>(k) + 1, Int(0));
        toeplitz[0] = 1;
        toeplitz[1] = -m.at(k - 1, k - 1);
        if (k >= 2) {
            v.resize(static_cast<std::size_t>(k) - 1);
            for (int i = 0; i < k - 1; ++i)
                v[static_cast<std::size_t>(i)] = m.at(i, k - 1); // S
            for (int j = 2; j <= k; ++j) {
                Int dot = 0;
                for (int i = 0; i < k - 1; ++i)
                    dot += m.at(k - 1, i) * v[static_cast<std::size_t>(i)]; // R . v
                toeplitz[static_cast<std::size_t>(j)] = -dot;
                if (j < k) {
                    vnext.assign(static_cast<std::size_t>(k) - 1, Int(0));
                    matvec(m, k - 1, v, vnext);
                    v.swap(vnext);
                }
            }
        }

        next.assign(static_cast<std::size_t>(k) + 1, Int(0));
        const int prev_len = k;
        for (int i = 0; i <= k; ++i) {
            Int acc = 0;
            const int j_lo = std::max(0, i - (prev_len - 1));
            const int j_hi = std::min(i, k);
            for (int j = j_lo; j <= j_hi; ++j)
                acc += toeplitz[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
            next[static_cast<std::size_t>(i)] = std::move(acc);
        }
        c.swap(next);
    }

    std::reverse(c.begin(), c.end()); // lowest-degree-first
    return c;
}

void matvec_serial(const IntMatrix& m, int dim, const std::vector<Int>& v, std::vector<Int>& out)
{
    for (int r = 0; r < dim; ++r) {
        Int acc = 0;
        for (int col = 0; col < dim; ++col)
            acc += m.at(r, col) * v[static_cast<std::size_t>(col)];
        out[static_cast<std::size_t>(r)] = std::move(acc);
    }
}

} // namespace

IntMatrix matmul_serial(const IntMatrix& a, const IntMatrix& b)
{
    require_multipliable(a, b);
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        matmul_row(a, b, out, i);
    return out;
}

IntMatrix matmul_omp(const IntMatrix& a, const IntMatrix& b)
{
    require_multipliable(a, b);
    IntMatrix out(a.rows(), b.cols());
    const std::int64_t rows = a.rows();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i)
        matmul_row(a, b, out, static_cast<int>(i));
    return out;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() >= kParallelCutoff)
        return matmul_omp(a, b);
    return matmul_serial(a, b);
}

Int bareiss_determinant_serial(IntMatrix work)
{
    return bareiss_run(std::move(work), [](IntMatrix& m, int k, const Int& prev_pivot) {
        const Int pivot = m.at(k, k);
        for (int i = k + 1; i < m.rows(); ++i)
            bareiss_update_row(m, k, i, pivot, prev_pivot);
    });
}

Int bareiss_determinant_omp(IntMatrix work)
{
    return bareiss_run(std::move(work), [](IntMatrix& m, int k, const Int& prev_pivot) {
        const Int pivot = m.at(k, k);
        const std::int64_t n = m.rows();
#pragma omp parallel for schedule(static)
        for (std::int64_t i = k + 1; i < n; ++i)
            bareiss_update_row(m, k, static_cast<int>(i), pivot, prev_pivot);
    });
}

Int bareiss_determinant(IntMatrix work)
{
    if (work.rows() >= kParallelCutoff)
        return bareiss_determinant_omp(std::move(work));
    return bareiss_determinant_serial(std::move(work));
}

std::vector<Int> berkowitz_charpoly_serial(const IntMatrix& m)
{
    return berkowitz_run(m, matvec_serial);
}

std::vector<Int> berkowitz_charpoly_omp(const IntMatrix& m)
{
    return berkowitz_run(m, [](const IntMatrix& mat, int dim, const std::vector<Int>& v,
                               std::vector<Int>& out) {
        const std::int64_t rows = dim;
#pragma omp parallel for schedule(static)
        for (std::int64_t r = 0; r < rows; ++r) {
            Int acc = 0;
            for (int col = 0; col < dim; ++col)
                acc += mat.at(static_cast<int>(r), col) * v[static_cast<std::size_t>(col)];
            out[static_cast<std::size_t>(r)] = std::move(acc);
        }
    });
}

std::vector<Int> berkowitz_charpoly(const IntMatrix& m)
{
    if (m.rows() >= kParallelCutoff)
        return berkowitz_charpoly_omp(m);
    return berkowitz_charpoly_serial(m);
}

} // namespace zetacomp::kernels
