#include "dirres/walk_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dirres/errors.hpp"
#include "dirres/rng.hpp"

namespace dirres {

namespace {

std::vector<char> membership(std::size_t n, const std::vector<std::size_t>& set) {
    std::vector<char> flags(n, 0);
    for (std::size_t v : set) {
        if (v >= n) throw DataError("target vertex " + std::to_string(v) + " out of range");
        flags[v] = 1;
    }
    return flags;
}

std::string set_label(const std::vector<std::size_t>& set) {
    if (set.size() == 1) return std::to_string(set.front());
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(set[i]);
    }
    return s + "}";
}

// Mean and standard error from per-walk totals accumulated streamwise.
struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t count = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++count;
    }

    WalkEstimate finish(std::string quantity, bool valid) const {
        WalkEstimate e;
        e.quantity = std::move(quantity);
        e.samples = count;
        e.valid = valid && count > 0;
        if (count > 0) {
            e.mean = sum / static_cast<double>(count);
            if (count > 1) {
                const double var =
                    std::max(0.0, (sum_sq - static_cast<double>(count) * e.mean * e.mean) /
                                      static_cast<double>(count - 1));
                e.std_error = std::sqrt(var / static_cast<double>(count));
            }
        }
        return e;
    }
};

} // namespace

WalkSimulator::WalkSimulator(const Digraph& g, std::uint64_t step_cap) : step_cap_(step_cap) {
    if (!is_strongly_connected(g))
        throw DataError("walk simulator requires a strongly connected digraph");
    const std::size_t n = g.order();
    cumulative_.resize(n);
    targets_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = g.out_degree(i);
        const double* row = g.adjacency().row_ptr(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0.0) continue;
            acc += row[j] / d;
            cumulative_[i].push_back(acc);
            targets_[i].push_back(j);
        }
        cumulative_[i].back() = 1.0;
    }
}

std::size_t WalkSimulator::step(std::size_t at, double u) const {
    const std::vector<double>& cum = cumulative_[at];
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    const std::size_t idx = std::min(static_cast<std::size_t>(it - cum.begin()), cum.size() - 1);
    return targets_[at][idx];
}

WalkEstimate WalkSimulator::escape_probability(std::size_t from,
                                               const std::vector<std::size_t>& target,
                                               std::size_t walks, std::uint64_t seed) const {
    if (from >= order()) throw DataError("walk start out of range");
    if (target.empty()) throw DataError("escape probability needs a nonempty target");
    const std::vector<char> in_target = membership(order(), target);
    if (in_target[from]) throw DataError("escape probability start must lie outside the target");

    Accumulator acc;
    std::uint64_t budget = step_cap_;
    bool valid = true;
    for (std::size_t w = 0; w < walks; ++w) {
        SplitMix64 rng(derive_seed(seed, w));
        std::size_t at = from;
        double hit = 0.0;
        for (;;) {
            if (budget == 0) {
                valid = false;
                break;
            }
            --budget;
            at = step(at, rng.next_double());
            if (in_target[at]) {
                hit = 1.0;
                break;
            }
            if (at == from) break;
        }
        if (!valid) break;
        acc.add(hit);
    }
    return acc.finish("P_es(" + std::to_string(from) + "," + set_label(target) + ")", valid);
}

WalkEstimate WalkSimulator::hitting_time(std::size_t from, std::size_t to, std::size_t walks,
                                         std::uint64_t seed) const {
    if (from >= order() || to >= order()) throw DataError("walk endpoints out of range");
    if (from == to) throw DataError("hitting time requires distinct endpoints");

    Accumulator acc;
    std::uint64_t budget = step_cap_;
    bool valid = true;
    for (std::size_t w = 0; w < walks; ++w) {
        SplitMix64 rng(derive_seed(seed, w));
        std::size_t at = from;
        double steps = 0.0;
        while (at != to) {
            if (budget == 0) {
                valid = false;
                break;
            }
            --budget;
            at = step(at, rng.next_double());
            steps += 1.0;
        }
        if (!valid) break;
        acc.add(steps);
    }
    return acc.finish("H(" + std::to_string(from) + "," + std::to_string(to) + ")", valid);
}

WalkEstimate WalkSimulator::commute_time(std::size_t from, const std::vector<std::size_t>& target,
                                         std::size_t walks, std::uint64_t seed) const {
    if (from >= order()) throw DataError("walk start out of range");
    if (target.empty()) throw DataError("commute time needs a nonempty target");
    const std::vector<char> in_target = membership(order(), target);
    if (in_target[from]) throw DataError("commute time start must lie outside the target");

    Accumulator acc;
    std::uint64_t budget = step_cap_;
    bool valid = true;
    for (std::size_t w = 0; w < walks; ++w) {
        SplitMix64 rng(derive_seed(seed, w));
        std::size_t at = from;
        double steps = 0.0;
        bool reached = false;
        for (;;) {
            if (budget == 0) {
                valid = false;
                break;
            }
            --budget;
            at = step(at, rng.next_double());
            steps += 1.0;
            if (!reached && in_target[at]) reached = true;
            if (reached && at == from) break;
        }
        if (!valid) break;
        acc.add(steps);
    }
    return acc.finish("C(" + std::to_string(from) + "," + set_label(target) + ")", valid);
}

WalkEstimate WalkSimulator::detour_time(std::size_t from, const std::vector<std::size_t>& transit,
                                        std::size_t to, std::size_t walks,
                                        std::uint64_t seed) const {
    if (from >= order() || to >= order()) throw DataError("walk endpoints out of range");
    if (transit.empty()) throw DataError("detour needs a nonempty transit set");
    const std::vector<char> in_transit = membership(order(), transit);

    Accumulator acc;
    std::uint64_t budget = step_cap_;
    bool valid = true;
    for (std::size_t w = 0; w < walks; ++w) {
        SplitMix64 rng(derive_seed(seed, w));
        std::size_t at = from;
        double steps = 0.0;
        // The transit set only counts once the walk has moved.
        bool touched = false;
        for (;;) {
            if (budget == 0) {
                valid = false;
                break;
            }
            --budget;
            at = step(at, rng.next_double());
            steps += 1.0;
            if (in_transit[at]) touched = true;
            if (touched && at == to) break;
        }
        if (!valid) break;
        acc.add(steps);
    }
    return acc.finish("H(" + std::to_string(from) + "," + set_label(transit) + "," +
                          std::to_string(to) + ")",
                      valid);
}

WalkEstimate WalkSimulator::visit_before(std::size_t start, std::size_t first, std::size_t second,
                                         std::size_t walks, std::uint64_t seed) const {
    if (start >= order() || first >= order() || second >= order())
        throw DataError("walk endpoints out of range");
    if (first == second) throw DataError("visit-before requires distinct targets");

    const std::string label = "phi_{" + std::to_string(first) + "," + std::to_string(second) +
                              "}(" + std::to_string(start) + ")";
    if (start == first || start == second) {
        WalkEstimate e;
        e.mean = start == first ? 1.0 : 0.0;
        e.std_error = 0.0;
        e.samples = walks;
        e.quantity = label;
        return e;
    }

    Accumulator acc;
    std::uint64_t budget = step_cap_;
    bool valid = true;
    for (std::size_t w = 0; w < walks; ++w) {
        SplitMix64 rng(derive_seed(seed, w));
        std::size_t at = start;
        double hit = 0.0;
        for (;;) {
            if (budget == 0) {
                valid = false;
                break;
            }
            --budget;
            at = step(at, rng.next_double());
            if (at == first) {
                hit = 1.0;
                break;
            }
            if (at == second) break;
        }
        if (!valid) break;
        acc.add(hit);
    }
    return acc.finish(label, valid);
}

WalkEstimate estimate_escape_probability(const Digraph& g, std::size_t from,
                                         const std::vector<std::size_t>& target,
                                         std::size_t walks, std::uint64_t seed) {
    return WalkSimulator(g).escape_probability(from, target, walks, seed);
}

WalkEstimate estimate_hitting_time(const Digraph& g, std::size_t from, std::size_t to,
                                   std::size_t walks, std::uint64_t seed) {
    return WalkSimulator(g).hitting_time(from, to, walks, seed);
}

WalkEstimate estimate_commute_time(const Digraph& g, std::size_t from,
                                   const std::vector<std::size_t>& target, std::size_t walks,
                                   std::uint64_t seed) {
    return WalkSimulator(g).commute_time(from, target, walks, seed);
}

WalkEstimate estimate_detour_time(const Digraph& g, std::size_t from,
                                  const std::vector<std::size_t>& transit, std::size_t to,
                                  std::size_t walks, std::uint64_t seed) {
    return WalkSimulator(g).detour_time(from, transit, to, walks, seed);
}

} // namespace dirres
