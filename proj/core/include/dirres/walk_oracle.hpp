#ifndef DIRRES_WALK_ORACLE_HPP_
#define DIRRES_WALK_ORACLE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dirres/digraph.hpp"
#include "dirres/tolerances.hpp"

namespace dirres {

// Monte Carlo estimate with its standard error. Deterministic under fixed
// (seed, walks); valid is false when the step cap truncated the run, in which
// case mean/std_error cover only the completed walks.
struct WalkEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    std::string quantity;
    bool valid = true;

    bool within_sigmas(double expected, double sigmas) const {
        return valid && std::abs(mean - expected) <= sigmas * std_error;
    }
};

// Random-walk simulator over a strongly connected digraph. Next-step sampling
// is inverse-CDF over precomputed cumulative transition rows. Walk w of an
// estimate uses the derived stream (seed, w), so estimates do not depend on
// evaluation order. Kept deliberately independent of the dense-algebra path:
// this is the probabilistic oracle the algebra is tested against.
class WalkSimulator {
public:
    explicit WalkSimulator(const Digraph& g,
                           std::uint64_t step_cap = tol::kWalkStepCap);

    // Fraction of walks from i that reach the target (vertex or set) before
    // first returning to i. Rejects i inside the target.
    WalkEstimate escape_probability(std::size_t from, const std::vector<std::size_t>& target,
                                    std::size_t walks, std::uint64_t seed) const;

    // Mean steps until first arrival at `to`. Rejects from == to.
    WalkEstimate hitting_time(std::size_t from, std::size_t to,
                              std::size_t walks, std::uint64_t seed) const;

    // Mean steps to reach the target (vertex or set) and then return to i.
    WalkEstimate commute_time(std::size_t from, const std::vector<std::size_t>& target,
                              std::size_t walks, std::uint64_t seed) const;

    // Mean steps of a walk from i that stops at j only after having visited
    // some vertex of X (at least one step; i may equal j).
    WalkEstimate detour_time(std::size_t from, const std::vector<std::size_t>& transit,
                             std::size_t to, std::size_t walks, std::uint64_t seed) const;

    // Probability that a walk from `start` reaches `first` before `second`
    // (the generalized voltage at `start`). Exact 1/0 when start coincides
    // with first/second.
    WalkEstimate visit_before(std::size_t start, std::size_t first, std::size_t second,
                              std::size_t walks, std::uint64_t seed) const;

    std::size_t order() const noexcept { return cumulative_.size(); }

private:
    std::size_t step(std::size_t at, double u) const;

    std::vector<std::vector<double>> cumulative_;  // per-row cumulative P
    std::vector<std::vector<std::size_t>> targets_; // per-row successor ids
    std::uint64_t step_cap_;
};

// Free-function forms over a graph (one-shot simulator construction).
WalkEstimate estimate_escape_probability(const Digraph& g, std::size_t from,
                                         const std::vector<std::size_t>& target,
                                         std::size_t walks, std::uint64_t seed);
WalkEstimate estimate_hitting_time(const Digraph& g, std::size_t from, std::size_t to,
                                   std::size_t walks, std::uint64_t seed);
WalkEstimate estimate_commute_time(const Digraph& g, std::size_t from,
                                   const std::vector<std::size_t>& target,
                                   std::size_t walks, std::uint64_t seed);
WalkEstimate estimate_detour_time(const Digraph& g, std::size_t from,
                                  const std::vector<std::size_t>& transit, std::size_t to,
                                  std::size_t walks, std::uint64_t seed);

} // namespace dirres

#endif // DIRRES_WALK_ORACLE_HPP_
