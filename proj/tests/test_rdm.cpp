#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dirres/digraph.hpp"
#include "dirres/errors.hpp"
#include "dirres/linalg.hpp"
#include "dirres/rdm.hpp"
#include "dirres/resistance.hpp"
#include "dirres/rng.hpp"
#include "support.hpp"

using namespace dirres;

TEST_CASE("marginal gain on the 3-cycle drops the group resistance from 2 to 1") {
    // Inverse of the 3-cycle Laplacian with vertex 2 removed; candidate is
    // survivor position 1 (vertex 1).
    DenseMatrix inv(2, 2);
    inv(0, 0) = 1.0;
    inv(0, 1) = 1.0;
    inv(1, 0) = 0.0;
    inv(1, 1) = 1.0;
    CHECK(marginal_gain(inv, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("marginal gain equals the direct trace difference") {
    SplitMix64 rng(5);
    const Digraph g = support::random_scc_digraph(31, 12, 36);
    const DenseMatrix l = digraph_laplacian(g);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t zsize = 1 + rng.next_below(3);
        const auto z = support::random_subset(rng, g.order(), zsize);
        const Submatrix sub = submatrix_removing(l, z);
        const DenseMatrix inv = lu_inverse(sub.matrix);
        for (std::size_t pos = 0; pos < sub.kept.size(); ++pos) {
            std::vector<std::size_t> zv = z;
            zv.push_back(sub.kept[pos]);
            const double direct = group_resistance(l, z) - group_resistance(l, zv);
            const double gain = marginal_gain(inv, pos);
            CHECK(gain >= -1e-10);
            CHECK(std::abs(gain - direct) < 1e-8 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("marginal gain reports breakdown on a vanishing denominator") {
    DenseMatrix inv = DenseMatrix::identity(3);
    inv(1, 1) = 0.0;
    CHECK_THROWS_AS(marginal_gain(inv, 1), NumericalError);
}

TEST_CASE("marginal gain of the sole remaining vertex is its diagonal entry") {
    DenseMatrix inv(1, 1);
    inv(0, 0) = 2.75;
    CHECK(marginal_gain(inv, 0) == doctest::Approx(2.75).epsilon(1e-14));
}

TEST_CASE("greedy with k = 1 equals brute force") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 5 + seed;
        const Digraph g = support::random_scc_digraph(seed, n, 3 * n);
        const ResistanceEngine e(g);
        const SelectionResult greedy = greedy_rdm(e, 1);
        const SelectionResult exact = brute_force_rdm(e, 1);
        CHECK(greedy.chosen == exact.chosen);
        CHECK(greedy.objective == doctest::Approx(exact.objective).epsilon(1e-10));
    }
}

TEST_CASE("greedy matches brute force on vertex-transitive cycles") {
    for (std::size_t n : {5, 8}) {
        const ResistanceEngine e(support::directed_cycle(n));
        for (std::size_t k = 1; k + 1 < n && k <= 4; ++k) {
            const SelectionResult greedy = greedy_rdm(e, k);
            const SelectionResult exact = brute_force_rdm(e, k);
            CHECK(greedy.objective == doctest::Approx(exact.objective).epsilon(1e-8));
        }
    }
}

TEST_CASE("greedy step trace is strictly decreasing and internally consistent") {
    const Digraph g = support::random_scc_digraph(41, 14, 45);
    const SelectionResult r = greedy_rdm(g, 5);
    REQUIRE(r.step_trace.size() == 5);
    REQUIRE(r.chosen.size() == 5);
    for (std::size_t s = 1; s < r.step_trace.size(); ++s)
        CHECK(r.step_trace[s].objective < r.step_trace[s - 1].objective + 1e-10);
    for (std::size_t s = 0; s < r.chosen.size(); ++s) CHECK(r.step_trace[s].vertex == r.chosen[s]);

    // No duplicates.
    std::vector<std::size_t> sorted = r.chosen;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    // Objective is an independent recomputation of the final set.
    const double check = group_resistance(g, r.chosen);
    CHECK(r.objective == doctest::Approx(check).epsilon(1e-8));
}

TEST_CASE("greedy downdate path equals direct re-inversion at every step") {
    for (std::uint64_t seed = 50; seed < 56; ++seed) {
        const std::size_t n = 10 + seed % 4;
        const Digraph g = support::random_scc_digraph(seed, n, 3 * n);
        const ResistanceEngine e(g);
        const SelectionResult r = greedy_rdm(e, 4);
        for (std::size_t s = 0; s < r.chosen.size(); ++s) {
            const std::vector<std::size_t> prefix(r.chosen.begin(), r.chosen.begin() + s + 1);
            const double direct = group_resistance(e.laplacian(), prefix);
            CHECK(std::abs(r.step_trace[s].objective - direct) <
                  1e-8 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("greedy gain satisfies the supermodular approximation bound") {
    for (std::uint64_t seed = 60; seed < 72; ++seed) {
        const std::size_t n = 8 + seed % 6;
        const Digraph g = support::random_scc_digraph(seed, n, 2 * n);
        const ResistanceEngine e(g);
        for (std::size_t k = 2; k <= 4; ++k) {
            const double best_single = brute_force_rdm(e, 1).objective;
            const double greedy = greedy_rdm(e, k).objective;
            const double optimum = brute_force_rdm(e, k).objective;
            const double ratio =
                1.0 - (static_cast<double>(k) / static_cast<double>(k - 1)) / std::exp(1.0);
            CHECK(best_single - greedy >= ratio * (best_single - optimum) - 1e-8);
        }
    }
}

TEST_CASE("greedy rejects out-of-range k") {
    const Digraph g = support::directed_cycle(4);
    CHECK_THROWS_AS(greedy_rdm(g, 0), DataError);
    CHECK_THROWS_AS(greedy_rdm(g, 4), DataError);
}

TEST_CASE("brute force on the 3-cycle") {
    const Digraph c3 = support::directed_cycle(3);
    const SelectionResult k1 = brute_force_rdm(c3, 1);
    CHECK(k1.chosen == std::vector<std::size_t>{0});
    CHECK(k1.objective == doctest::Approx(2.0).epsilon(1e-10));

    const SelectionResult k2 = brute_force_rdm(c3, 2);
    CHECK(k2.chosen == std::vector<std::size_t>{0, 1});
    CHECK(k2.objective == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("brute force rejects instances above the cap") {
    const Digraph g = support::random_scc_digraph(70, 30, 90);
    CHECK_THROWS_WITH_AS(brute_force_rdm(g, 6, 1000), doctest::Contains("cap"), DataError);
}

TEST_CASE("brute force dominates sampled subsets") {
    SplitMix64 rng(8);
    const Digraph g = support::random_scc_digraph(71, 10, 30);
    const ResistanceEngine e(g);
    const SelectionResult best = brute_force_rdm(e, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = support::random_subset(rng, g.order(), 3);
        CHECK(best.objective <= group_resistance(e.laplacian(), x) + 1e-10);
    }
}

TEST_CASE("top-degree baseline picks the hub of a star with backlinks") {
    // Hub 0 points to everyone; spokes point back, and a spoke ring keeps it
    // strongly connected.
    std::vector<EdgeTriple> triples;
    for (long long s = 1; s <= 4; ++s) {
        triples.push_back({0, s, 1.0});
        triples.push_back({s, 0, 1.0});
        triples.push_back({s, s % 4 + 1, 1.0});
    }
    const Digraph g = build_digraph(triples);
    const SelectionResult r = baseline_top_degree(g, 1);
    CHECK(r.chosen == std::vector<std::size_t>{0});
}

TEST_CASE("random baseline is deterministic under a fixed seed") {
    const Digraph g = support::random_scc_digraph(73, 12, 36);
    const SelectionResult a = baseline_random(g, 4, 99);
    const SelectionResult b = baseline_random(g, 4, 99);
    CHECK(a.chosen == b.chosen);
    CHECK(a.objective == b.objective);

    const SelectionResult c = baseline_random(g, 4, 100);
    CHECK((a.chosen != c.chosen || a.objective == c.objective));
}

TEST_CASE("min-res baseline with k = 1 equals the greedy seed") {
    for (std::uint64_t seed = 80; seed < 86; ++seed) {
        const Digraph g = support::random_scc_digraph(seed, 9, 27);
        const ResistanceEngine e(g);
        CHECK(baseline_min_res(e, 1).chosen == greedy_rdm(e, 1).chosen);
    }
    // Also on the fully tied cycle.
    const ResistanceEngine cyc(support::directed_cycle(6));
    CHECK(baseline_min_res(cyc, 1).chosen == greedy_rdm(cyc, 1).chosen);
}

TEST_CASE("selection results carry original labels") {
    // Shifted labels: vertices 10..14.
    std::vector<EdgeTriple> triples;
    for (long long i = 0; i < 5; ++i) triples.push_back({10 + i, 10 + (i + 1) % 5, 1.0});
    const Digraph g = build_digraph(triples);
    const SelectionResult r = greedy_rdm(g, 2);
    REQUIRE(r.chosen_labels.size() == 2);
    for (std::size_t s = 0; s < 2; ++s) CHECK(r.chosen_labels[s] == g.labels()[r.chosen[s]]);
    CHECK(r.chosen_labels.front() >= 10);
}

TEST_CASE("binomial_capped") {
    CHECK(binomial_capped(14, 4) == 1001);
    CHECK(binomial_capped(50, 3) == 19600);
    CHECK(binomial_capped(5, 0) == 1);
    CHECK(binomial_capped(3, 5) == 0);
    CHECK(binomial_capped(200, 100) == std::numeric_limits<std::uint64_t>::max());
}
