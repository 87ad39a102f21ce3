#ifndef DIRRES_RDM_HPP_
#define DIRRES_RDM_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dirres/dense_matrix.hpp"
#include "dirres/digraph.hpp"
#include "dirres/resistance.hpp"
#include "dirres/tolerances.hpp"

namespace dirres {

// Outcome of a k-vertex selection. chosen holds internal ids in selection
// order; chosen_labels the same vertices as original labels. The objective is
// always an independent group-resistance recomputation of the chosen set.
struct SelectionResult {
    std::vector<std::size_t> chosen;
    std::vector<long long> chosen_labels;
    double objective = 0.0;
    std::string method;

    struct Step {
        std::size_t vertex;
        double objective;
    };
    std::vector<Step> step_trace;

    double wall_time_seconds = 0.0;
};

// Marginal drop of the group resistance when vertex (surviving index) v joins
// the removed set Z, evaluated from A = L with Z removed via
//   (e_v^T A^-2 e_v) / (e_v^T A^-1 e_v),
// where the numerator is the dot product of row v and column v of A^-1 (no
// explicit matrix square). A denominator at or below the breakdown floor
// raises NumericalError.
double marginal_gain(const DenseMatrix& lx_inv, std::size_t v);

// Greedy minimization of the group resistance. Seeds with the vertex of
// minimum single-vertex resistance, then repeatedly adds the argmax marginal
// gain, maintaining the submatrix inverse through rank-one downdates.
// O(n^3 + k n^2). Ties are broken by the smallest original label; the final
// objective is re-derived by direct inversion as a drift check.
SelectionResult greedy_rdm(const Digraph& g, std::size_t k);
SelectionResult greedy_rdm(const ResistanceEngine& engine, std::size_t k);

// Exact optimum by lexicographic enumeration of all k-subsets. Rejects
// instances whose subset count exceeds the cap, reporting the required
// budget. Ties resolve to the lexicographically smallest vertex set.
SelectionResult brute_force_rdm(const Digraph& g, std::size_t k,
                                std::uint64_t cap = tol::kBruteForceCap);
SelectionResult brute_force_rdm(const ResistanceEngine& engine, std::size_t k,
                                std::uint64_t cap = tol::kBruteForceCap);

// Baselines. Each recomputes its objective through group_resistance.
SelectionResult baseline_random(const Digraph& g, std::size_t k, std::uint64_t seed);
SelectionResult baseline_random(const ResistanceEngine& engine, std::size_t k, std::uint64_t seed);
SelectionResult baseline_top_degree(const Digraph& g, std::size_t k);
SelectionResult baseline_top_degree(const ResistanceEngine& engine, std::size_t k);
SelectionResult baseline_min_res(const Digraph& g, std::size_t k);
SelectionResult baseline_min_res(const ResistanceEngine& engine, std::size_t k);

// C(n, k) saturated at 2^64-1; used for cap checks.
std::uint64_t binomial_capped(std::size_t n, std::size_t k);

} // namespace dirres

#endif // DIRRES_RDM_HPP_
