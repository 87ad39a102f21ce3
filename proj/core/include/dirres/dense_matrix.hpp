#ifndef DIRRES_DENSE_MATRIX_HPP_
#define DIRRES_DENSE_MATRIX_HPP_

#include <cstddef>
#include <vector>

namespace dirres {

// Row-major dense real matrix. Value semantics; every routine in the toolkit
// works in 64-bit IEEE doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix constant(std::size_t rows, std::size_t cols, double value);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() noexcept { return data_; }
    const std::vector<double>& data() const noexcept { return data_; }

    DenseMatrix transposed() const;

    double row_sum(std::size_t i) const;
    double col_sum(std::size_t j) const;
    double max_abs() const;
    double norm_1() const;   // max column sum of |entries|
    double norm_inf() const; // max row sum of |entries|
    bool all_finite() const;

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);

// Sum of the diagonal. Rejects non-square input.
double trace(const DenseMatrix& a);

// max_ij |a_ij - b_ij|; rejects shape mismatch.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

} // namespace dirres

#endif // DIRRES_DENSE_MATRIX_HPP_
