#ifndef DIRRES_TESTS_SUPPORT_HPP_
#define DIRRES_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

#include "dirres/dense_matrix.hpp"
#include "dirres/digraph.hpp"
#include "dirres/linalg.hpp"
#include "dirres/rng.hpp"

namespace support {

// Strongly connected by construction: a random Hamiltonian cycle plus extra
// random arcs, weights in [0.5, 2).
inline dirres::Digraph random_scc_digraph(std::uint64_t seed, std::size_t n,
                                          std::size_t extra_arcs) {
    dirres::SplitMix64 rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i-- > 1;) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
        std::swap(perm[i], perm[j]);
    }

    std::vector<dirres::EdgeTriple> triples;
    auto weight = [&] { return 0.5 + 1.5 * rng.next_double(); };
    for (std::size_t i = 0; i < n; ++i)
        triples.push_back({static_cast<long long>(perm[i]),
                           static_cast<long long>(perm[(i + 1) % n]), weight()});
    for (std::size_t e = 0; e < extra_arcs; ++e) {
        const auto a = static_cast<long long>(rng.next_below(n));
        auto b = static_cast<long long>(rng.next_below(n));
        if (a == b) b = (b + 1) % static_cast<long long>(n);
        triples.push_back({a, b, weight()});
    }
    dirres::BuildOptions options;
    options.vertex_count = n;
    return dirres::build_digraph(triples, options);
}

inline dirres::Digraph directed_cycle(std::size_t n) {
    std::vector<dirres::EdgeTriple> triples;
    for (std::size_t i = 0; i < n; ++i)
        triples.push_back({static_cast<long long>(i), static_cast<long long>((i + 1) % n), 1.0});
    return dirres::build_digraph(triples);
}

inline dirres::Digraph bidirected_path(std::size_t n) {
    std::vector<dirres::EdgeTriple> triples;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        triples.push_back({static_cast<long long>(i), static_cast<long long>(i + 1), 1.0});
        triples.push_back({static_cast<long long>(i + 1), static_cast<long long>(i), 1.0});
    }
    return dirres::build_digraph(triples);
}

inline dirres::Digraph bidirected_triangle() {
    return dirres::build_digraph({{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}, {0, 2, 1}, {2, 0, 1}});
}

inline dirres::Digraph two_vertex_bidirected() {
    return dirres::build_digraph({{0, 1, 1}, {1, 0, 1}});
}

// Residuals of the four defining conditions of the Moore-Penrose inverse,
// plus the commutation defect. All should vanish for a valid pseudoinverse.
struct PenroseResiduals {
    double a_m_a;      // ||A M A - A||
    double m_a_m;      // ||M A M - M||
    double am_sym;     // ||A M - (A M)^T||
    double ma_sym;     // ||M A - (M A)^T||
    double commute;    // ||A M - M A||
    double max() const {
        double r = a_m_a;
        r = r < m_a_m ? m_a_m : r;
        r = r < am_sym ? am_sym : r;
        r = r < ma_sym ? ma_sym : r;
        return r;
    }
};

inline PenroseResiduals penrose_residuals(const dirres::DenseMatrix& a,
                                          const dirres::DenseMatrix& m) {
    const dirres::DenseMatrix am = a * m;
    const dirres::DenseMatrix ma = m * a;
    PenroseResiduals r{};
    r.a_m_a = dirres::max_abs_diff(am * a, a);
    r.m_a_m = dirres::max_abs_diff(ma * m, m);
    r.am_sym = dirres::max_abs_diff(am, am.transposed());
    r.ma_sym = dirres::max_abs_diff(ma, ma.transposed());
    r.commute = dirres::max_abs_diff(am, ma);
    return r;
}

// Uniform random k-subset of 0..n-1 (test-side sampling helper).
inline std::vector<std::size_t> random_subset(dirres::SplitMix64& rng, std::size_t n,
                                              std::size_t k) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
        std::swap(ids[i], ids[j]);
    }
    ids.resize(k);
    return ids;
}

} // namespace support

#endif // DIRRES_TESTS_SUPPORT_HPP_
