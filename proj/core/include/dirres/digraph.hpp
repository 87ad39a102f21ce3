#ifndef DIRRES_DIGRAPH_HPP_
#define DIRRES_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dirres/dense_matrix.hpp"

namespace dirres {

// Raw input edge: vertex ids as they appear in the source (file, generator).
struct EdgeTriple {
    long long src = 0;
    long long dst = 0;
    double weight = 1.0;
};

// Arc in compacted 0..n-1 vertex ids, after merging parallel arcs.
struct Arc {
    std::size_t src = 0;
    std::size_t dst = 0;
    double weight = 0.0;
};

struct BuildOptions {
    // Self-loops are dropped (and counted) by default; the normalization the
    // transition-matrix proofs rely on. When true they are kept on the
    // diagonal of the adjacency matrix instead.
    bool keep_loops = false;

    // When set, the graph has exactly this many vertices, ids 0..n-1, even if
    // some are isolated. Generators use this so model size is preserved.
    std::optional<std::size_t> vertex_count;
};

struct BuildReport {
    std::size_t loops_dropped = 0;
    std::size_t arcs_merged = 0;
};

// Weighted directed graph over compacted vertex ids 0..n-1 with a dense
// nonnegative adjacency matrix. labels()[v] recovers the original id of v.
// Immutable after construction and safe to share across threads.
class Digraph {
public:
    Digraph() = default; // empty graph; populate through a factory

    static Digraph from_adjacency(DenseMatrix adjacency, std::vector<long long> labels);

    std::size_t order() const noexcept { return adjacency_.rows(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    const DenseMatrix& adjacency() const noexcept { return adjacency_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const std::vector<long long>& labels() const noexcept { return labels_; }

    double out_degree(std::size_t v) const { return out_degree_[v]; }
    double in_degree(std::size_t v) const { return in_degree_[v]; }
    const std::vector<double>& out_degrees() const noexcept { return out_degree_; }
    double volume() const noexcept { return volume_; }

    // Internal id of an original label, if present.
    std::optional<std::size_t> find_label(long long label) const;

private:
    DenseMatrix adjacency_;
    std::vector<Arc> arcs_;
    std::vector<long long> labels_;
    std::vector<double> out_degree_;
    std::vector<double> in_degree_;
    double volume_ = 0.0;
};

// Merges parallel arcs by weight summation, drops (and counts) self-loops,
// and compacts vertex ids in order of first appearance. Rejects nonpositive
// weights, negative ids and empty input.
Digraph build_digraph(const std::vector<EdgeTriple>& triples,
                      const BuildOptions& options = {},
                      BuildReport* report = nullptr);

std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

// Induced subgraph on the largest strongly connected component (ties broken
// by the smallest contained original label) plus the old-to-new id map
// (-1 for vertices outside the component).
struct SccResult {
    Digraph graph;
    std::vector<std::ptrdiff_t> relabel;
};

SccResult largest_scc(const Digraph& g);

// Row-stochastic transition matrix D^-1 W. Rejects zero out-degrees.
DenseMatrix transition_matrix(const Digraph& g);

// Stationary distribution of the random walk: pi^T P = pi^T, sum pi = 1,
// all entries positive.
struct StationaryDistribution {
    std::vector<double> pi;

    std::size_t size() const noexcept { return pi.size(); }
    double operator[](std::size_t i) const { return pi[i]; }
};

// Direct linear solve of (P^T - I) x = 0 with one row replaced by the
// normalization sum x = 1 (LU with partial pivoting, one refinement pass).
// Power iteration is not used: it does not converge on periodic chains such
// as directed cycles. Requires strong connectivity and n >= 2.
StationaryDistribution stationary_distribution(const Digraph& g);

} // namespace dirres

#endif // DIRRES_DIGRAPH_HPP_
