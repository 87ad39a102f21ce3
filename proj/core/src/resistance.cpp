#include "dirres/resistance.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dirres/errors.hpp"
#include "dirres/linalg.hpp"
#include "dirres/tolerances.hpp"

namespace dirres {

namespace {

void check_vertex(const Digraph& g, std::size_t v) {
    if (v >= g.order())
        throw DataError("vertex index " + std::to_string(v) + " out of range (n = " +
                        std::to_string(g.order()) + ")");
}

// Neumaier-compensated accumulator; pairwise sums stay reproducible and
// accurate on the larger networks.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double value) {
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value))
            comp += (sum - t) + value;
        else
            comp += (value - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace

DenseMatrix digraph_laplacian(const Digraph& g, const DenseMatrix& transition,
                              const StationaryDistribution& pi) {
    const std::size_t n = g.order();
    const double volume = g.volume();
    DenseMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double scale = volume * pi[i];
        const double* p = transition.row_ptr(i);
        double* row = l.row_ptr(i);
        for (std::size_t j = 0; j < n; ++j) row[j] = scale * ((i == j ? 1.0 : 0.0) - p[j]);
    }
    return l;
}

DenseMatrix digraph_laplacian(const Digraph& g) {
    const StationaryDistribution pi = stationary_distribution(g);
    return digraph_laplacian(g, transition_matrix(g), pi);
}

DenseMatrix normalized_laplacian(const Digraph& g, const StationaryDistribution& pi) {
    const DenseMatrix l = digraph_laplacian(g, transition_matrix(g), pi);
    const std::size_t n = g.order();
    const double volume = g.volume();
    DenseMatrix ln(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ln(i, j) = l(i, j) / (volume * std::sqrt(pi[i] * pi[j]));
    return ln;
}

ResistanceEngine::ResistanceEngine(Digraph g) : graph_(std::move(g)) {
    pi_ = stationary_distribution(graph_);
    laplacian_ = digraph_laplacian(graph_, transition_matrix(graph_), pi_);

    Pseudoinverse pinv = pseudoinverse_laplacian(laplacian_);
    pseudoinverse_ = std::move(pinv.matrix);
    condition_estimate_ = pinv.condition_estimate;
    trace_pseudoinverse_ = trace(pseudoinverse_);

    const std::size_t n = graph_.order();
    kirchhoff_ = static_cast<double>(n) * trace_pseudoinverse_;

    CompensatedSum weighted;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            weighted.add(pi_[i] * pi_[j] * resistance(i, j));
    multiplicative_kirchhoff_ = volume() * volume() * weighted.value();
}

bool ResistanceEngine::ill_conditioned() const noexcept {
    return condition_estimate_ > tol::kConditionWarn;
}

double ResistanceEngine::resistance(std::size_t i, std::size_t j) const {
    check_vertex(graph_, i);
    check_vertex(graph_, j);
    if (i == j) return 0.0;
    return pseudoinverse_(i, i) + pseudoinverse_(j, j) - pseudoinverse_(i, j) -
           pseudoinverse_(j, i);
}

double ResistanceEngine::vertex_resistance(std::size_t i) const {
    check_vertex(graph_, i);
    return static_cast<double>(graph_.order()) * pseudoinverse_(i, i) + trace_pseudoinverse_;
}

double ResistanceEngine::kemeny_constant_spectral() const {
    const std::size_t n = graph_.order();
    const double volume = graph_.volume();

    // Normalized Laplacian plus the rank-one completion s s^T, s = sqrt(pi).
    DenseMatrix shifted(n, n);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::sqrt(pi_[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            shifted(i, j) = laplacian_(i, j) / (volume * s[i] * s[j]) + s[i] * s[j];

    return trace(lu_inverse(shifted)) - 1.0;
}

ResistanceEngine build_engine(const Digraph& g) { return ResistanceEngine(g); }

double kemeny_constant_checked(const ResistanceEngine& engine, double rel_tol) {
    const double direct = engine.kemeny_constant();
    const double spectral = engine.kemeny_constant_spectral();
    if (std::abs(direct - spectral) > rel_tol * std::max({1.0, std::abs(direct), std::abs(spectral)}))
        throw NumericalError("Kemeny constant routes disagree: " + std::to_string(direct) +
                             " vs " + std::to_string(spectral));
    return direct;
}

double resistance_via_submatrix(const DenseMatrix& laplacian, std::size_t i, std::size_t j) {
    if (i == j) throw DataError("submatrix route is undefined for i == j");
    const std::size_t n = laplacian.rows();
    if (i >= n || j >= n) throw DataError("vertex index out of range");

    const Submatrix sub = submatrix_removing(laplacian, {i});
    const std::size_t pos = j < i ? j : j - 1;
    DenseMatrix rhs(sub.matrix.rows(), 1, 0.0);
    rhs(pos, 0) = 1.0;
    const DenseMatrix col = lu_solve(sub.matrix, rhs);
    return col(pos, 0);
}

double resistance_via_submatrix(const Digraph& g, std::size_t i, std::size_t j) {
    check_vertex(g, i);
    check_vertex(g, j);
    return resistance_via_submatrix(digraph_laplacian(g), i, j);
}

namespace {

std::vector<std::size_t> validate_group(std::size_t n, const std::vector<std::size_t>& group) {
    if (group.empty()) throw DataError("vertex group must be nonempty");
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> unique;
    for (std::size_t v : group) {
        if (v >= n) throw DataError("group vertex " + std::to_string(v) + " out of range");
        if (!seen[v]) {
            seen[v] = 1;
            unique.push_back(v);
        }
    }
    if (unique.size() >= n) throw DataError("vertex group must be a strict subset of the vertices");
    return unique;
}

} // namespace

double group_resistance_point(const DenseMatrix& laplacian, std::size_t i,
                              const std::vector<std::size_t>& group) {
    const std::size_t n = laplacian.rows();
    if (i >= n) throw DataError("vertex index out of range");
    const std::vector<std::size_t> x = validate_group(n, group);
    for (std::size_t v : x)
        if (v == i) return 0.0;

    const Submatrix sub = submatrix_removing(laplacian, x);
    std::size_t pos = 0;
    while (sub.kept[pos] != i) ++pos;
    DenseMatrix rhs(sub.matrix.rows(), 1, 0.0);
    rhs(pos, 0) = 1.0;
    const DenseMatrix col = lu_solve(sub.matrix, rhs);
    return col(pos, 0);
}

double group_resistance_point(const Digraph& g, std::size_t i, const std::vector<std::size_t>& group) {
    check_vertex(g, i);
    return group_resistance_point(digraph_laplacian(g), i, group);
}

double group_resistance(const DenseMatrix& laplacian, const std::vector<std::size_t>& group) {
    const std::vector<std::size_t> x = validate_group(laplacian.rows(), group);
    const Submatrix sub = submatrix_removing(laplacian, x);
    return trace(LuDecomposition::factor(sub.matrix).inverse());
}

double group_resistance(const Digraph& g, const std::vector<std::size_t>& group) {
    return group_resistance(digraph_laplacian(g), group);
}

} // namespace dirres
