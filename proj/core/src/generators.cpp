#include "dirres/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dirres/errors.hpp"
#include "dirres/rng.hpp"

namespace dirres {

namespace {

std::string compact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

Digraph from_unit_arcs(const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                       std::size_t n) {
    std::vector<EdgeTriple> triples;
    triples.reserve(arcs.size());
    for (const auto& [a, b] : arcs)
        triples.push_back({static_cast<long long>(a), static_cast<long long>(b), 1.0});
    BuildOptions options;
    options.vertex_count = n;
    return build_digraph(triples, options);
}

// Inverse-CDF sampler over rank weights (i+1)^-alpha, i = 0..n-1.
struct RankSampler {
    std::vector<double> cumulative;

    RankSampler(std::size_t n, double alpha) {
        cumulative.resize(n);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += std::pow(static_cast<double>(i + 1), -alpha);
            cumulative[i] = acc;
        }
    }

    std::size_t draw(SplitMix64& rng) const {
        const double r = rng.next_double() * cumulative.back();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
        return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
            it - cumulative.begin(), static_cast<std::ptrdiff_t>(cumulative.size()) - 1));
    }
};

} // namespace

std::string GenSpec::label() const {
    switch (model) {
        case GenModel::ws:
            return "ws-n" + std::to_string(n) + "-K" + std::to_string(ws_neighbors) + "-p" +
                   compact(ws_rewire_p) + "-b" + compact(ws_out_prob);
        case GenModel::er:
            return "er-n" + std::to_string(n) + "-p" + compact(er_arc_p);
        case GenModel::sf:
            return "sf-n" + std::to_string(n) + "-m" + std::to_string(sf_arc_draws) + "-aout" +
                   compact(sf_alpha_out) + "-ain" + compact(sf_alpha_in);
    }
    return "unknown";
}

Digraph generate(const GenSpec& spec) {
    if (spec.n < 3) throw DataError("generator needs n >= 3");
    switch (spec.model) {
        case GenModel::ws:
            return gen_directed_ws(spec.n, spec.ws_neighbors, spec.ws_rewire_p, spec.ws_out_prob,
                                   spec.seed);
        case GenModel::er:
            return gen_directed_er(spec.n, spec.er_arc_p, spec.seed);
        case GenModel::sf:
            return gen_directed_sf(spec.n, spec.sf_arc_draws, spec.sf_alpha_out, spec.sf_alpha_in,
                                   spec.seed);
    }
    throw DataError("unknown generator model");
}

Digraph gen_directed_ws(std::size_t n, std::size_t k_neighbors, double p, double b,
                        std::uint64_t seed) {
    if (n < 3) throw DataError("ws generator needs n >= 3");
    if (k_neighbors < 1 || 2 * k_neighbors >= n)
        throw DataError("ws generator needs 1 <= K < n/2");
    if (p < 0.0 || p > 1.0) throw DataError("ws rewire probability must lie in [0, 1]");
    if (b < 0.0 || b > 1.0) throw DataError("ws out-direction probability must lie in [0, 1]");

    SplitMix64 rng(seed);
    std::set<std::pair<std::size_t, std::size_t>> present;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    arcs.reserve(n * k_neighbors);

    const std::uint64_t max_attempts = 100 * static_cast<std::uint64_t>(n);

    // One arc per (lap, vertex): lap sweeps the 1st..Kth counterclockwise
    // neighbor. A rewired arc, or a base arc already occupied by an earlier
    // rewiring, resamples its target until free.
    for (std::size_t lap = 1; lap <= k_neighbors; ++lap) {
        for (std::size_t v = 0; v < n; ++v) {
            const bool rewire = rng.next_double() < p;
            const bool outward = b >= 1.0 || rng.next_double() < b;

            std::size_t target = (v + lap) % n;
            if (rewire) target = static_cast<std::size_t>(rng.next_below(n));

            auto arc_of = [&](std::size_t t) {
                return outward ? std::make_pair(v, t) : std::make_pair(t, v);
            };

            std::uint64_t attempts = 0;
            while (target == v || present.count(arc_of(target))) {
                if (++attempts > max_attempts)
                    throw DataError("ws generator could not place an arc after " +
                                    std::to_string(max_attempts) + " attempts");
                target = static_cast<std::size_t>(rng.next_below(n));
            }
            present.insert(arc_of(target));
            arcs.push_back(arc_of(target));
        }
    }
    return from_unit_arcs(arcs, n);
}

Digraph gen_directed_er(std::size_t n, double p, std::uint64_t seed) {
    if (n < 3) throw DataError("er generator needs n >= 3");
    if (!(p > 0.0) || p > 1.0) throw DataError("er arc probability must lie in (0, 1]");

    SplitMix64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (rng.next_double() < p) arcs.emplace_back(i, j);
        }
    if (arcs.empty()) throw DataError("er generator drew no arcs; raise p or change the seed");
    return from_unit_arcs(arcs, n);
}

Digraph gen_directed_sf(std::size_t n, std::size_t m, double alpha_out, double alpha_in,
                        std::uint64_t seed, std::size_t* duplicate_draws) {
    if (n < 3) throw DataError("sf generator needs n >= 3");
    if (m < 1) throw DataError("sf generator needs m >= 1");
    if (alpha_out < 0.0 || alpha_out >= 1.0 || alpha_in < 0.0 || alpha_in >= 1.0)
        throw DataError("sf exponents must lie in [0, 1)");

    SplitMix64 rng(seed);
    const RankSampler out(n, alpha_out);
    const RankSampler in(n, alpha_in);

    std::set<std::pair<std::size_t, std::size_t>> present;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    std::size_t duplicates = 0;

    for (std::size_t draw = 0; draw < m; ++draw) {
        std::size_t i, j;
        do {
            i = out.draw(rng);
            j = in.draw(rng);
        } while (i == j);
        // Repeated arcs collapse; the weights stay unit.
        if (!present.insert({i, j}).second) {
            ++duplicates;
            continue;
        }
        arcs.emplace_back(i, j);
    }
    if (duplicate_draws) *duplicate_draws = duplicates;
    if (arcs.empty()) throw DataError("sf generator drew no arcs");
    return from_unit_arcs(arcs, n);
}

} // namespace dirres
