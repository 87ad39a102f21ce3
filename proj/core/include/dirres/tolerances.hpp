#ifndef DIRRES_TOLERANCES_HPP_
#define DIRRES_TOLERANCES_HPP_

#include <cstdint>

namespace dirres {

// Central tolerance pack. Algebraic identities are checked at kAlgebraic in
// max norm; Monte Carlo identities at kStochasticSigmas standard errors.
struct Tolerances {
    double algebraic = 1e-8;
    double stochastic_sigmas = 3.0;
};

namespace tol {

// LU pivot is singular when |pivot| < kPivotRel * max|A|.
inline constexpr double kPivotRel = 1e-12;

// 1-norm condition estimate above which results carry a warning.
inline constexpr double kConditionWarn = 1e12;

// Required accuracy of the stationary distribution: ||pi^T P - pi^T||_inf.
inline constexpr double kStationaryResidual = 1e-10;

// Row/column sums of a Laplacian handed to the pseudoinverse routine.
inline constexpr double kLaplacianZeroSum = 1e-9;

// Denominators below this are treated as numerical breakdown.
inline constexpr double kBreakdownFloor = 1e-14;

// Relative window inside which two objective values count as a tie; ties are
// then broken by vertex label so selections are deterministic.
inline constexpr double kTieRel = 1e-10;

// Default subset-enumeration budget of the brute-force optimizer.
inline constexpr std::uint64_t kBruteForceCap = 2'000'000;

// Total random-walk steps allowed per estimate before it is flagged invalid.
inline constexpr std::uint64_t kWalkStepCap = 1'000'000'000;

// |a - b| <= rel * max(1, |a|, |b|)
bool close_rel(double a, double b, double rel);

// Tie predicate used by deterministic argmin/argmax selections.
bool tied(double a, double b);

} // namespace tol
} // namespace dirres

#endif // DIRRES_TOLERANCES_HPP_
