#include "dirres/dense_matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "dirres/errors.hpp"

namespace dirres {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::constant(std::size_t rows, std::size_t cols, double value) {
    return DenseMatrix(rows, cols, value);
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double DenseMatrix::row_sum(std::size_t i) const {
    double s = 0.0;
    const double* r = row_ptr(i);
    for (std::size_t j = 0; j < cols_; ++j) s += r[j];
    return s;
}

double DenseMatrix::col_sum(std::size_t j) const {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
    return s;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

double DenseMatrix::norm_1() const {
    double m = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
        m = std::max(m, s);
    }
    return m;
}

double DenseMatrix::norm_inf() const {
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        const double* r = row_ptr(i);
        for (std::size_t j = 0; j < cols_; ++j) s += std::abs(r[j]);
        m = std::max(m, s);
    }
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DataError("matrix product shape mismatch");
    DenseMatrix c(a.rows(), b.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* __restrict ci = c.row_ptr(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* __restrict bk = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DataError("matrix sum shape mismatch");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DataError("matrix difference shape mismatch");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
    DenseMatrix c = a;
    for (double& v : c.data()) v *= s;
    return c;
}

double trace(const DenseMatrix& a) {
    if (!a.square()) throw DataError("trace of a non-square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DataError("matrix diff shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

} // namespace dirres
