#include "dirres/rdm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dirres/errors.hpp"
#include "dirres/linalg.hpp"
#include "dirres/rng.hpp"

namespace dirres {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_k(std::size_t k, std::size_t n) {
    if (k < 1 || k >= n)
        throw DataError("k must satisfy 1 <= k < n (k = " + std::to_string(k) +
                        ", n = " + std::to_string(n) + ")");
}

// Deterministic selection: candidates within the tie window of the incumbent
// resolve to the smallest original label, independent of scan order.
struct BestPick {
    bool has = false;
    std::size_t vertex = 0;
    double value = 0.0;
    long long label = 0;

    void offer(std::size_t v, double val, long long lab, bool maximize) {
        if (!has) {
            has = true;
            vertex = v;
            value = val;
            label = lab;
            return;
        }
        if (tol::tied(val, value)) {
            if (lab < label) {
                vertex = v;
                value = val;
                label = lab;
            }
            return;
        }
        const bool better = maximize ? val > value : val < value;
        if (better) {
            vertex = v;
            value = val;
            label = lab;
        }
    }
};

void fill_labels(SelectionResult& r, const Digraph& g) {
    r.chosen_labels.clear();
    r.chosen_labels.reserve(r.chosen.size());
    for (std::size_t v : r.chosen) r.chosen_labels.push_back(g.labels()[v]);
}

} // namespace

double marginal_gain(const DenseMatrix& lx_inv, std::size_t v) {
    if (!lx_inv.square()) throw DataError("marginal gain requires a square inverse");
    const std::size_t m = lx_inv.rows();
    if (v >= m) throw DataError("marginal gain index out of range");

    const double denom = lx_inv(v, v);
    if (denom <= tol::kBreakdownFloor)
        throw NumericalError("marginal gain denominator " + std::to_string(denom) +
                             " at or below breakdown floor");

    // (A^-2)_vv as row(v) . col(v); no explicit matrix square.
    double num = 0.0;
    const double* row = lx_inv.row_ptr(v);
    for (std::size_t k = 0; k < m; ++k) num += row[k] * lx_inv(k, v);
    return num / denom;
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double c = 1.0L;
    constexpr long double limit = static_cast<long double>(std::numeric_limits<std::uint64_t>::max());
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (c >= limit) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(c + 0.5L);
}

SelectionResult greedy_rdm(const ResistanceEngine& engine, std::size_t k) {
    const auto start = Clock::now();
    const Digraph& g = engine.graph();
    const std::size_t n = g.order();
    check_k(k, n);

    const DenseMatrix& lpp = engine.pseudoinverse();
    const double tr_lpp = engine.trace_pseudoinverse();

    SelectionResult result;
    result.method = "greedy";

    // Seed with the minimizer of the single-vertex resistance.
    BestPick seed;
    for (std::size_t v = 0; v < n; ++v)
        seed.offer(v, static_cast<double>(n) * lpp(v, v) + tr_lpp, g.labels()[v], false);
    result.chosen.push_back(seed.vertex);

    // Survivor-indexed inverse of the Laplacian with the seed removed. The
    // entries follow from the pseudoinverse alone, so the first submatrix
    // inverse costs O(n^2) instead of a fresh factorization.
    std::vector<std::size_t> survivors;
    survivors.reserve(n - 1);
    for (std::size_t v = 0; v < n; ++v)
        if (v != seed.vertex) survivors.push_back(v);

    const std::size_t s = seed.vertex;
    DenseMatrix inv(n - 1, n - 1);
    for (std::size_t r = 0; r < n - 1; ++r) {
        const std::size_t i = survivors[r];
        double* dst = inv.row_ptr(r);
        for (std::size_t c = 0; c < n - 1; ++c) {
            const std::size_t j = survivors[c];
            dst[c] = lpp(s, s) + lpp(i, j) - lpp(i, s) - lpp(s, j);
        }
    }
    result.step_trace.push_back({seed.vertex, trace(inv)});

    for (std::size_t step = 1; step < k; ++step) {
        BestPick pick;
        for (std::size_t p = 0; p < survivors.size(); ++p)
            pick.offer(p, marginal_gain(inv, p), g.labels()[survivors[p]], true);

        const std::size_t pos = pick.vertex;
        result.chosen.push_back(survivors[pos]);
        inv = rank_one_downdate(inv, pos);
        survivors.erase(survivors.begin() + static_cast<std::ptrdiff_t>(pos));
        result.step_trace.push_back({result.chosen.back(), trace(inv)});
    }

    // Drift check: the downdated trace must match a direct re-inversion.
    const double direct = group_resistance(engine.laplacian(), result.chosen);
    const double path = result.step_trace.back().objective;
    if (!tol::close_rel(path, direct, 1e-8))
        throw NumericalError("greedy downdate drift: trace " + std::to_string(path) +
                             " vs direct " + std::to_string(direct));
    result.objective = direct;

    fill_labels(result, g);
    result.wall_time_seconds = seconds_since(start);
    return result;
}

SelectionResult greedy_rdm(const Digraph& g, std::size_t k) {
    check_k(k, g.order());
    const auto start = Clock::now();
    SelectionResult result = greedy_rdm(ResistanceEngine(g), k);
    result.wall_time_seconds = seconds_since(start);
    return result;
}

SelectionResult brute_force_rdm(const ResistanceEngine& engine, std::size_t k, std::uint64_t cap) {
    const auto start = Clock::now();
    const Digraph& g = engine.graph();
    const std::size_t n = g.order();
    check_k(k, n);

    const std::uint64_t subsets = binomial_capped(n, k);
    if (subsets > cap)
        throw DataError("brute force requires " + std::to_string(subsets) +
                        " subset evaluations, above the cap of " + std::to_string(cap));

    const DenseMatrix& l = engine.laplacian();
    SelectionResult result;
    result.method = "exact";

    std::vector<std::size_t> comb(k);
    std::iota(comb.begin(), comb.end(), 0);

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_set;
    bool have_best = false;

    for (;;) {
        const double obj = group_resistance(l, comb);
        // Enumeration is lexicographic, so keeping the incumbent on a tie
        // yields the lexicographically smallest optimal set.
        if (!have_best || (!tol::tied(obj, best) && obj < best)) {
            have_best = true;
            best = obj;
            best_set = comb;
        }

        // Next combination.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (comb[i] != i + n - k) break;
            if (i == 0) {
                i = k;
                break;
            }
        }
        if (i == k) break;
        ++comb[i];
        for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }

    result.chosen = best_set;
    result.objective = group_resistance(l, best_set);
    fill_labels(result, g);
    result.wall_time_seconds = seconds_since(start);
    return result;
}

SelectionResult brute_force_rdm(const Digraph& g, std::size_t k, std::uint64_t cap) {
    check_k(k, g.order());
    if (binomial_capped(g.order(), k) > cap)
        throw DataError("brute force requires " + std::to_string(binomial_capped(g.order(), k)) +
                        " subset evaluations, above the cap of " + std::to_string(cap));
    const auto start = Clock::now();
    SelectionResult result = brute_force_rdm(ResistanceEngine(g), k, cap);
    result.wall_time_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

SelectionResult baseline_random(const ResistanceEngine& engine, std::size_t k, std::uint64_t seed) {
    const auto start = Clock::now();
    const Digraph& g = engine.graph();
    const std::size_t n = g.order();
    check_k(k, n);

    // Partial Fisher-Yates: the first k entries are a uniform k-subset.
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
        std::swap(ids[i], ids[j]);
    }

    SelectionResult result;
    result.method = "random";
    result.chosen.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));
    result.objective = group_resistance(engine.laplacian(), result.chosen);
    fill_labels(result, g);
    result.wall_time_seconds = seconds_since(start);
    return result;
}

SelectionResult baseline_random(const Digraph& g, std::size_t k, std::uint64_t seed) {
    check_k(k, g.order());
    return baseline_random(ResistanceEngine(g), k, seed);
}

SelectionResult baseline_top_degree(const ResistanceEngine& engine, std::size_t k) {
    const auto start = Clock::now();
    const Digraph& g = engine.graph();
    const std::size_t n = g.order();
    check_k(k, n);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (g.out_degree(a) != g.out_degree(b)) return g.out_degree(a) > g.out_degree(b);
        return g.labels()[a] < g.labels()[b];
    });

    SelectionResult result;
    result.method = "top-degree";
    result.chosen.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    result.objective = group_resistance(engine.laplacian(), result.chosen);
    fill_labels(result, g);
    result.wall_time_seconds = seconds_since(start);
    return result;
}

SelectionResult baseline_top_degree(const Digraph& g, std::size_t k) {
    check_k(k, g.order());
    return baseline_top_degree(ResistanceEngine(g), k);
}

SelectionResult baseline_min_res(const ResistanceEngine& engine, std::size_t k) {
    const auto start = Clock::now();
    const Digraph& g = engine.graph();
    const std::size_t n = g.order();
    check_k(k, n);

    std::vector<double> score(n);
    for (std::size_t v = 0; v < n; ++v) score[v] = engine.vertex_resistance(v);

    // Same windowed argmin as the greedy seed, applied k times, so the k = 1
    // sets of the two methods coincide.
    std::vector<char> taken(n, 0);
    SelectionResult result;
    result.method = "min-res";
    for (std::size_t step = 0; step < k; ++step) {
        BestPick pick;
        for (std::size_t v = 0; v < n; ++v)
            if (!taken[v]) pick.offer(v, score[v], g.labels()[v], false);
        taken[pick.vertex] = 1;
        result.chosen.push_back(pick.vertex);
    }
    result.objective = group_resistance(engine.laplacian(), result.chosen);
    fill_labels(result, g);
    result.wall_time_seconds = seconds_since(start);
    return result;
}

SelectionResult baseline_min_res(const Digraph& g, std::size_t k) {
    check_k(k, g.order());
    return baseline_min_res(ResistanceEngine(g), k);
}

} // namespace dirres
