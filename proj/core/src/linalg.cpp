#include "dirres/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dirres/errors.hpp"
#include "dirres/tolerances.hpp"

namespace dirres {

namespace tol {

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

bool tied(double a, double b) { return close_rel(a, b, kTieRel); }

} // namespace tol

LuDecomposition LuDecomposition::factor(const DenseMatrix& a) {
    if (!a.square()) throw DataError("LU factorization requires a square matrix");
    const std::size_t n = a.rows();
    LuDecomposition d;
    d.lu_ = a;
    d.perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.perm_[i] = i;

    const double pivot_floor = tol::kPivotRel * a.max_abs();
    DenseMatrix& lu = d.lu_;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        double pivot_mag = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double mag = std::abs(lu(i, k));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = i;
            }
        }
        if (pivot_mag <= pivot_floor)
            throw NumericalError("matrix is singular to working tolerance (pivot " +
                                 std::to_string(pivot_mag) + " at column " + std::to_string(k) + ")");
        if (pivot_row != k) {
            double* rk = lu.row_ptr(k);
            double* rp = lu.row_ptr(pivot_row);
            std::swap_ranges(rk, rk + n, rp);
            std::swap(d.perm_[k], d.perm_[pivot_row]);
        }
        const double pivot = lu(k, k);
        const double* __restrict rk = lu.row_ptr(k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu(i, k) / pivot;
            lu(i, k) = factor;
            if (factor == 0.0) continue;
            double* __restrict ri = lu.row_ptr(i);
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= factor * rk[j];
        }
    }
    return d;
}

DenseMatrix LuDecomposition::solve(const DenseMatrix& b) const {
    const std::size_t n = order();
    if (b.rows() != n) throw DataError("LU solve: right-hand side has wrong row count");
    const std::size_t k = b.cols();

    DenseMatrix x(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        const double* src = b.row_ptr(perm_[i]);
        double* dst = x.row_ptr(i);
        std::copy(src, src + k, dst);
    }
    // Forward substitution with the unit lower factor.
    for (std::size_t i = 1; i < n; ++i) {
        double* __restrict xi = x.row_ptr(i);
        const double* li = lu_.row_ptr(i);
        for (std::size_t j = 0; j < i; ++j) {
            const double f = li[j];
            if (f == 0.0) continue;
            const double* __restrict xj = x.row_ptr(j);
            for (std::size_t c = 0; c < k; ++c) xi[c] -= f * xj[c];
        }
    }
    // Back substitution with the upper factor.
    for (std::size_t ii = n; ii-- > 0;) {
        double* __restrict xi = x.row_ptr(ii);
        const double* ui = lu_.row_ptr(ii);
        for (std::size_t j = ii + 1; j < n; ++j) {
            const double f = ui[j];
            if (f == 0.0) continue;
            const double* __restrict xj = x.row_ptr(j);
            for (std::size_t c = 0; c < k; ++c) xi[c] -= f * xj[c];
        }
        const double diag = ui[ii];
        for (std::size_t c = 0; c < k; ++c) xi[c] /= diag;
    }
    return x;
}

DenseMatrix LuDecomposition::inverse() const {
    return solve(DenseMatrix::identity(order()));
}

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b) {
    return LuDecomposition::factor(a).solve(b);
}

DenseMatrix lu_inverse(const DenseMatrix& a) {
    return LuDecomposition::factor(a).inverse();
}

double condition_estimate_1norm(const DenseMatrix& a, const DenseMatrix& a_inv) {
    return a.norm_1() * a_inv.norm_1();
}

bool Pseudoinverse::ill_conditioned() const {
    return condition_estimate > tol::kConditionWarn;
}

Pseudoinverse pseudoinverse_laplacian(const DenseMatrix& laplacian) {
    if (!laplacian.square() || laplacian.rows() == 0)
        throw DataError("pseudoinverse requires a nonempty square matrix");
    const std::size_t n = laplacian.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(laplacian.row_sum(i)) > tol::kLaplacianZeroSum)
            throw DataError("row " + std::to_string(i) + " of the Laplacian does not sum to zero");
        if (std::abs(laplacian.col_sum(i)) > tol::kLaplacianZeroSum)
            throw DataError("column " + std::to_string(i) + " of the Laplacian does not sum to zero");
    }

    const double shift = 1.0 / static_cast<double>(n);
    DenseMatrix shifted = laplacian;
    for (double& v : shifted.data()) v -= shift;

    const LuDecomposition lu = LuDecomposition::factor(shifted);
    DenseMatrix inv = lu.inverse();

    Pseudoinverse result;
    result.condition_estimate = condition_estimate_1norm(shifted, inv);
    for (double& v : inv.data()) v += shift;
    result.matrix = std::move(inv);
    return result;
}

Submatrix submatrix_removing(const DenseMatrix& a, const std::vector<std::size_t>& removed) {
    if (!a.square()) throw DataError("submatrix removal requires a square matrix");
    const std::size_t n = a.rows();

    std::vector<char> drop(n, 0);
    std::size_t dropped = 0;
    for (std::size_t idx : removed) {
        if (idx >= n) throw DataError("submatrix removal index " + std::to_string(idx) + " out of range");
        if (!drop[idx]) {
            drop[idx] = 1;
            ++dropped;
        }
    }
    if (dropped == n) throw DataError("cannot remove every index");

    Submatrix s;
    s.kept.reserve(n - dropped);
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i]) s.kept.push_back(i);

    const std::size_t m = s.kept.size();
    s.matrix = DenseMatrix(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        const double* src = a.row_ptr(s.kept[r]);
        double* dst = s.matrix.row_ptr(r);
        for (std::size_t c = 0; c < m; ++c) dst[c] = src[s.kept[c]];
    }
    return s;
}

DenseMatrix rank_one_downdate(const DenseMatrix& a_inv, std::size_t v) {
    if (!a_inv.square()) throw DataError("rank-one downdate requires a square matrix");
    const std::size_t m = a_inv.rows();
    if (v >= m) throw DataError("downdate index out of range");
    if (m < 2) throw DataError("downdate would produce an empty matrix");

    const double pivot = a_inv(v, v);
    if (std::abs(pivot) <= tol::kBreakdownFloor)
        throw NumericalError("rank-one downdate pivot vanished (" + std::to_string(pivot) + ")");

    DenseMatrix out(m - 1, m - 1);
    const double* __restrict pivot_row = a_inv.row_ptr(v);
    for (std::size_t r = 0, ro = 0; r < m; ++r) {
        if (r == v) continue;
        const double* __restrict src = a_inv.row_ptr(r);
        const double scale = src[v] / pivot;
        double* __restrict dst = out.row_ptr(ro++);
        std::size_t co = 0;
        for (std::size_t c = 0; c < v; ++c) dst[co++] = src[c] - scale * pivot_row[c];
        for (std::size_t c = v + 1; c < m; ++c) dst[co++] = src[c] - scale * pivot_row[c];
    }
    return out;
}

} // namespace dirres
