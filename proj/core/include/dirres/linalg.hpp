#ifndef DIRRES_LINALG_HPP_
#define DIRRES_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "dirres/dense_matrix.hpp"

namespace dirres {

// LU factorization with partial pivoting, PA = LU, stored packed. A pivot
// smaller than tol::kPivotRel * max|A| raises NumericalError.
class LuDecomposition {
public:
    static LuDecomposition factor(const DenseMatrix& a);

    // Solves A X = B for a matrix right-hand side.
    DenseMatrix solve(const DenseMatrix& b) const;
    DenseMatrix inverse() const;

    std::size_t order() const noexcept { return lu_.rows(); }

private:
    LuDecomposition() = default;
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
};

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix lu_inverse(const DenseMatrix& a);

// ||A||_1 * ||A^-1||_1.
double condition_estimate_1norm(const DenseMatrix& a, const DenseMatrix& a_inv);

// Moore-Penrose pseudoinverse of a zero-row-sum, zero-column-sum Laplacian,
// computed through the shifted inverse (L - J/n)^-1 + J/n. The condition
// estimate of the shifted matrix is attached instead of failing when large.
struct Pseudoinverse {
    DenseMatrix matrix;
    double condition_estimate = 0.0;

    bool ill_conditioned() const;
};

Pseudoinverse pseudoinverse_laplacian(const DenseMatrix& laplacian);

// Square submatrix with the rows and columns in `removed` deleted, plus the
// surviving original indices in order.
struct Submatrix {
    DenseMatrix matrix;
    std::vector<std::size_t> kept;
};

Submatrix submatrix_removing(const DenseMatrix& a, const std::vector<std::size_t>& removed);

// Given A^-1, returns the inverse of A with row/column v removed:
// (A^-1 - A^-1 e_v e_v^T A^-1 / (A^-1)_vv) with row/column v deleted.
// Rejects a vanishing pivot (A^-1)_vv.
DenseMatrix rank_one_downdate(const DenseMatrix& a_inv, std::size_t v);

} // namespace dirres

#endif // DIRRES_LINALG_HPP_
