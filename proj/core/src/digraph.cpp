#include "dirres/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>

#include "dirres/errors.hpp"
#include "dirres/linalg.hpp"
#include "dirres/tolerances.hpp"

namespace dirres {

Digraph Digraph::from_adjacency(DenseMatrix adjacency, std::vector<long long> labels) {
    if (!adjacency.square()) throw DataError("adjacency matrix must be square");
    if (labels.size() != adjacency.rows()) throw DataError("label count does not match vertex count");
    for (double v : adjacency.data())
        if (!(v >= 0.0) || !std::isfinite(v)) throw DataError("adjacency entries must be finite and nonnegative");

    Digraph g;
    g.adjacency_ = std::move(adjacency);
    g.labels_ = std::move(labels);

    const std::size_t n = g.adjacency_.rows();
    g.out_degree_.assign(n, 0.0);
    g.in_degree_.assign(n, 0.0);
    g.arcs_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = g.adjacency_.row_ptr(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double w = row[j];
            if (w == 0.0) continue;
            g.arcs_.push_back(Arc{i, j, w});
            g.out_degree_[i] += w;
            g.in_degree_[j] += w;
        }
    }
    g.volume_ = 0.0;
    for (double d : g.out_degree_) g.volume_ += d;
    return g;
}

std::optional<std::size_t> Digraph::find_label(long long label) const {
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

Digraph build_digraph(const std::vector<EdgeTriple>& triples, const BuildOptions& options,
                      BuildReport* report) {
    if (triples.empty()) throw DataError("empty edge set");

    std::unordered_map<long long, std::size_t> index;
    std::vector<long long> labels;
    if (options.vertex_count) {
        labels.reserve(*options.vertex_count);
        for (std::size_t v = 0; v < *options.vertex_count; ++v) {
            index.emplace(static_cast<long long>(v), v);
            labels.push_back(static_cast<long long>(v));
        }
    }

    auto intern = [&](long long id, std::size_t entry) {
        if (id < 0)
            throw DataError("negative vertex id " + std::to_string(id) + " at entry " +
                            std::to_string(entry + 1));
        auto [it, inserted] = index.try_emplace(id, labels.size());
        if (inserted) {
            if (options.vertex_count)
                throw DataError("vertex id " + std::to_string(id) + " outside the declared range at entry " +
                                std::to_string(entry + 1));
            labels.push_back(id);
        }
        return it->second;
    };

    // First pass registers vertices in order of first appearance, including
    // endpoints of self-loops that are later dropped.
    for (std::size_t e = 0; e < triples.size(); ++e) {
        const EdgeTriple& t = triples[e];
        if (!(t.weight > 0.0) || !std::isfinite(t.weight))
            throw DataError("nonpositive weight " + std::to_string(t.weight) + " at entry " +
                            std::to_string(e + 1));
        intern(t.src, e);
        intern(t.dst, e);
    }

    const std::size_t n = labels.size();
    DenseMatrix w(n, n, 0.0);
    BuildReport rep;
    for (const EdgeTriple& t : triples) {
        const std::size_t a = index.at(t.src);
        const std::size_t b = index.at(t.dst);
        if (a == b && !options.keep_loops) {
            ++rep.loops_dropped;
            continue;
        }
        if (w(a, b) != 0.0) ++rep.arcs_merged;
        w(a, b) += t.weight;
    }
    if (report) *report = rep;
    return Digraph::from_adjacency(std::move(w), std::move(labels));
}

namespace {

// Iterative Tarjan; recursion would overflow on the larger datasets.
struct TarjanState {
    std::vector<int> index;
    std::vector<int> lowlink;
    std::vector<char> on_stack;
    std::vector<std::size_t> stack;
    int counter = 0;
};

} // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g) {
    const std::size_t n = g.order();

    std::vector<std::vector<std::size_t>> succ(n);
    for (const Arc& a : g.arcs()) succ[a.src].push_back(a.dst);

    TarjanState st;
    st.index.assign(n, -1);
    st.lowlink.assign(n, 0);
    st.on_stack.assign(n, 0);

    std::vector<std::vector<std::size_t>> components;

    struct Frame {
        std::size_t v;
        std::size_t next_child = 0;
    };
    std::vector<Frame> frames;

    for (std::size_t root = 0; root < n; ++root) {
        if (st.index[root] != -1) continue;
        frames.push_back({root});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const std::size_t v = f.v;
            if (f.next_child == 0) {
                st.index[v] = st.lowlink[v] = st.counter++;
                st.stack.push_back(v);
                st.on_stack[v] = 1;
            }
            bool descended = false;
            while (f.next_child < succ[v].size()) {
                const std::size_t u = succ[v][f.next_child++];
                if (st.index[u] == -1) {
                    frames.push_back({u});
                    descended = true;
                    break;
                }
                if (st.on_stack[u]) st.lowlink[v] = std::min(st.lowlink[v], st.index[u]);
            }
            if (descended) continue;
            if (st.lowlink[v] == st.index[v]) {
                std::vector<std::size_t> comp;
                for (;;) {
                    const std::size_t u = st.stack.back();
                    st.stack.pop_back();
                    st.on_stack[u] = 0;
                    comp.push_back(u);
                    if (u == v) break;
                }
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
            frames.pop_back();
            if (!frames.empty()) {
                Frame& parent = frames.back();
                st.lowlink[parent.v] = std::min(st.lowlink[parent.v], st.lowlink[v]);
            }
        }
    }
    return components;
}

bool is_strongly_connected(const Digraph& g) {
    return strongly_connected_components(g).size() == 1;
}

SccResult largest_scc(const Digraph& g) {
    const auto components = strongly_connected_components(g);

    auto min_label = [&](const std::vector<std::size_t>& comp) {
        long long m = g.labels()[comp.front()];
        for (std::size_t v : comp) m = std::min(m, g.labels()[v]);
        return m;
    };

    std::size_t best = 0;
    for (std::size_t c = 1; c < components.size(); ++c) {
        const auto& cand = components[c];
        const auto& cur = components[best];
        if (cand.size() > cur.size() ||
            (cand.size() == cur.size() && min_label(cand) < min_label(cur)))
            best = c;
    }
    const std::vector<std::size_t>& comp = components[best];

    SccResult result;
    result.relabel.assign(g.order(), -1);
    const std::size_t m = comp.size();
    std::vector<long long> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        result.relabel[comp[i]] = static_cast<std::ptrdiff_t>(i);
        labels[i] = g.labels()[comp[i]];
    }

    DenseMatrix w(m, m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        const double* src = g.adjacency().row_ptr(comp[r]);
        double* dst = w.row_ptr(r);
        for (std::size_t c = 0; c < m; ++c) dst[c] = src[comp[c]];
    }
    result.graph = Digraph::from_adjacency(std::move(w), std::move(labels));
    return result;
}

DenseMatrix transition_matrix(const Digraph& g) {
    const std::size_t n = g.order();
    DenseMatrix p(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = g.out_degree(i);
        if (!(d > 0.0))
            throw DataError("vertex " + std::to_string(g.labels()[i]) + " has zero out-degree");
        const double* w = g.adjacency().row_ptr(i);
        double* row = p.row_ptr(i);
        for (std::size_t j = 0; j < n; ++j) row[j] = w[j] / d;
    }
    return p;
}

StationaryDistribution stationary_distribution(const Digraph& g) {
    const std::size_t n = g.order();
    if (n < 2) throw DataError("stationary distribution requires at least two vertices");
    if (!is_strongly_connected(g)) throw DataError("graph is not strongly connected");

    const DenseMatrix p = transition_matrix(g);

    // (P^T - I) x = 0 with the last row replaced by the normalization.
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = p(j, i) - (i == j ? 1.0 : 0.0);
    for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = 1.0;

    DenseMatrix b(n, 1, 0.0);
    b(n - 1, 0) = 1.0;

    const LuDecomposition lu = LuDecomposition::factor(a);
    DenseMatrix x = lu.solve(b);

    // One step of iterative refinement tightens the residual well below the
    // contract tolerance.
    DenseMatrix r(n, 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x(j, 0);
        r(i, 0) = b(i, 0) - s;
    }
    const DenseMatrix dx = lu.solve(r);
    for (std::size_t i = 0; i < n; ++i) x(i, 0) += dx(i, 0);

    StationaryDistribution pi;
    pi.pi.resize(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        pi.pi[i] = x(i, 0);
        sum += pi.pi[i];
        if (!(pi.pi[i] > 0.0))
            throw NumericalError("stationary probability of vertex " +
                                 std::to_string(g.labels()[i]) + " is not positive");
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw NumericalError("stationary distribution does not sum to one (sum " +
                             std::to_string(sum) + ")");

    double residual = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += pi.pi[i] * p(i, j);
        residual = std::max(residual, std::abs(s - pi.pi[j]));
    }
    if (residual > tol::kStationaryResidual)
        throw NumericalError("stationary residual " + std::to_string(residual) +
                             " exceeds tolerance");
    return pi;
}

} // namespace dirres
