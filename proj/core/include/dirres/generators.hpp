#ifndef DIRRES_GENERATORS_HPP_
#define DIRRES_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "dirres/digraph.hpp"

namespace dirres {

enum class GenModel { ws, er, sf };

// Parameters of the seeded random digraph models. Identical specs produce
// bitwise-identical edge lists.
struct GenSpec {
    GenModel model = GenModel::er;
    std::size_t n = 50;

    // ws: each vertex contributes one arc per lap over K laps.
    std::size_t ws_neighbors = 10;  // K
    double ws_rewire_p = 0.5;       // p
    double ws_out_prob = 1.0;       // b: probability the arc leaves the current vertex

    // er: independent arc probability per ordered pair.
    double er_arc_p = 0.15;

    // sf: m endpoint draws with rank weights i^-alpha.
    std::size_t sf_arc_draws = 300;
    double sf_alpha_out = 0.5;
    double sf_alpha_in = 0.5;

    std::uint64_t seed = 0;

    std::string label() const;
};

Digraph generate(const GenSpec& spec);

// Directed small-world ring: n vertices, K counterclockwise laps, rewire
// probability p, out-direction probability b. Emits exactly n*K distinct
// arcs with unit weights; both rewired arcs and base arcs that would collide
// resample their target (bounded retries).
Digraph gen_directed_ws(std::size_t n, std::size_t k_neighbors, double p, double b,
                        std::uint64_t seed);

// Each ordered pair (i, j), i != j, receives an arc independently with
// probability p; unit weights.
Digraph gen_directed_er(std::size_t n, double p, std::uint64_t seed);

// m draws of (source ~ i^-alpha_out, target ~ j^-alpha_in) over ranks 1..n;
// a draw with equal endpoints is redrawn, repeated arcs collapse (counted),
// so the final arc count is at most m. Unit weights.
Digraph gen_directed_sf(std::size_t n, std::size_t m, double alpha_out, double alpha_in,
                        std::uint64_t seed, std::size_t* duplicate_draws = nullptr);

} // namespace dirres

#endif // DIRRES_GENERATORS_HPP_
