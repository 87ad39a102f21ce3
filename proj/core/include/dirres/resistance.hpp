#ifndef DIRRES_RESISTANCE_HPP_
#define DIRRES_RESISTANCE_HPP_

#include <cstddef>
#include <vector>

#include "dirres/dense_matrix.hpp"
#include "dirres/digraph.hpp"

namespace dirres {

// Laplacian of a strongly connected digraph: d_G * Pi * (I - P). Reduces to
// D - W when the adjacency matrix is symmetric.
DenseMatrix digraph_laplacian(const Digraph& g);
DenseMatrix digraph_laplacian(const Digraph& g, const DenseMatrix& transition,
                              const StationaryDistribution& pi);

// Pi^{1/2} (I - P) Pi^{-1/2}, equal to L scaled by 1/(d_G sqrt(pi_i pi_j)).
DenseMatrix normalized_laplacian(const Digraph& g, const StationaryDistribution& pi);

// Immutable bundle of (graph, volume, pi, L, L^+) giving O(1) pairwise
// resistance queries after an O(n^3) setup. Queries are pure; a shared
// engine may serve concurrent readers.
class ResistanceEngine {
public:
    explicit ResistanceEngine(Digraph g);

    const Digraph& graph() const noexcept { return graph_; }
    std::size_t order() const noexcept { return graph_.order(); }
    double volume() const noexcept { return graph_.volume(); }
    const StationaryDistribution& stationary() const noexcept { return pi_; }
    const DenseMatrix& laplacian() const noexcept { return laplacian_; }
    const DenseMatrix& pseudoinverse() const noexcept { return pseudoinverse_; }
    double trace_pseudoinverse() const noexcept { return trace_pseudoinverse_; }

    // 1-norm condition estimate of the shifted matrix behind L^+; large
    // values are reported, not fatal.
    double condition_estimate() const noexcept { return condition_estimate_; }
    bool ill_conditioned() const noexcept;

    // Pairwise resistance distance via L^+: Lpp_ii + Lpp_jj - Lpp_ij - Lpp_ji.
    double resistance(std::size_t i, std::size_t j) const;

    // Resistance distance of a single vertex: n * Lpp_ii + tr(Lpp), equal to
    // the row sum of pairwise distances.
    double vertex_resistance(std::size_t i) const;

    // Sum of pairwise resistance distances over unordered pairs, n * tr(Lpp).
    double kirchhoff_index() const noexcept { return kirchhoff_; }

    // d_G^2 * sum_{i<j} pi_i pi_j Omega(i,j), accumulated in a fixed index
    // order with compensated summation so reports are reproducible.
    double multiplicative_kirchhoff_index() const noexcept { return multiplicative_kirchhoff_; }

    // Expected hitting time to a stationary-random target; the multiplicative
    // Kirchhoff index divided by the volume.
    double kemeny_constant() const noexcept { return multiplicative_kirchhoff_ / volume(); }

    // Independent route: trace of the normalized-Laplacian pseudoinverse,
    // computed as tr((Ln + s s^T)^-1) - 1 with s = sqrt(pi) entrywise, whose
    // rank-one shift fills the coinciding one-dimensional null spaces.
    double kemeny_constant_spectral() const;

private:
    Digraph graph_;
    StationaryDistribution pi_;
    DenseMatrix laplacian_;
    DenseMatrix pseudoinverse_;
    double trace_pseudoinverse_ = 0.0;
    double condition_estimate_ = 0.0;
    double kirchhoff_ = 0.0;
    double multiplicative_kirchhoff_ = 0.0;
};

ResistanceEngine build_engine(const Digraph& g);

// kemeny_constant() cross-checked against the spectral route at the given
// relative tolerance; disagreement raises NumericalError.
double kemeny_constant_checked(const ResistanceEngine& engine, double rel_tol = 1e-7);

// Pairwise resistance through the submatrix route: the (j,j) diagonal entry
// of the inverse of L with row/column i removed. Rejects i == j.
double resistance_via_submatrix(const Digraph& g, std::size_t i, std::size_t j);
double resistance_via_submatrix(const DenseMatrix& laplacian, std::size_t i, std::size_t j);

// Resistance between vertex i and vertex group X: the (i,i) diagonal entry
// of the inverse of L with rows/columns X removed; 0 when i is in X.
// X must be a nonempty strict subset of the vertices.
double group_resistance_point(const Digraph& g, std::size_t i, const std::vector<std::size_t>& group);
double group_resistance_point(const DenseMatrix& laplacian, std::size_t i,
                              const std::vector<std::size_t>& group);

// Resistance distance of a vertex group: tr(inverse of L with X removed),
// equal to the sum of group_resistance_point over all vertices.
double group_resistance(const Digraph& g, const std::vector<std::size_t>& group);
double group_resistance(const DenseMatrix& laplacian, const std::vector<std::size_t>& group);

} // namespace dirres

#endif // DIRRES_RESISTANCE_HPP_
