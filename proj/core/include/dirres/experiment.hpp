#ifndef DIRRES_EXPERIMENT_HPP_
#define DIRRES_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dirres/edge_list_io.hpp"
#include "dirres/generators.hpp"
#include "dirres/rdm.hpp"
#include "dirres/tolerances.hpp"

namespace dirres {

enum class Method { greedy, exact, random, top_degree, min_res };

std::string method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// One experiment: a network (file or generator spec), selection methods, and
// k = 1..k_max, repeated over seeds. For generator inputs each seed draws a
// fresh instance; for file inputs seeds only drive the random baseline.
struct ExperimentConfig {
    std::optional<std::filesystem::path> input_path;
    std::optional<GenSpec> gen;
    std::string network_label; // derived from the input when empty

    std::size_t k_max = 6;
    std::vector<Method> methods;
    std::vector<std::uint64_t> seeds = {0};

    std::optional<std::filesystem::path> output_path;
    std::uint64_t brute_force_cap = tol::kBruteForceCap;
    Tolerances tolerances;

    // Wall times perturb byte-identical reruns, so they are zeroed unless
    // explicitly requested.
    bool record_timings = false;

    LoadOptions load;
};

// CSV schema: network,n,m,n_scc,m_scc,method,k,objective,chosen,seed,wall_time_s
// with ';'-joined chosen labels and 17-significant-digit reals. A row whose
// exact search exceeded the cap carries objective nan and an empty chosen set.
struct ResultRow {
    std::string network;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t n_scc = 0;
    std::size_t m_scc = 0;
    std::string method;
    std::size_t k = 0;
    double objective = 0.0;
    std::vector<long long> chosen;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;

    bool skipped() const;
};

// Runs every (method, k, seed) cell, validates each objective against an
// independent group-resistance recomputation, emits rows in the canonical
// (network, method, k, seed) order, and writes the CSV when an output path
// is configured.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(std::istream& in);

} // namespace dirres

#endif // DIRRES_EXPERIMENT_HPP_
