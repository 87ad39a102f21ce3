#include "dirres/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

#include "dirres/errors.hpp"

namespace dirres {

std::string method_name(Method m) {
    switch (m) {
        case Method::greedy: return "greedy";
        case Method::exact: return "exact";
        case Method::random: return "random";
        case Method::top_degree: return "top-degree";
        case Method::min_res: return "min-res";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "greedy") return Method::greedy;
    if (name == "exact") return Method::exact;
    if (name == "random") return Method::random;
    if (name == "top-degree") return Method::top_degree;
    if (name == "min-res") return Method::min_res;
    return std::nullopt;
}

bool ResultRow::skipped() const { return std::isnan(objective); }

namespace {

struct NetworkInstance {
    std::string label;
    std::size_t n = 0;
    std::size_t m = 0;
    Digraph reduced;
};

NetworkInstance instantiate(const ExperimentConfig& config, std::uint64_t seed) {
    NetworkInstance inst;
    if (config.gen) {
        GenSpec spec = *config.gen;
        spec.seed = seed;
        const Digraph full = generate(spec);
        inst.label = config.network_label.empty() ? spec.label() : config.network_label;
        inst.n = full.order();
        inst.m = full.arc_count();
        inst.reduced = largest_scc(full).graph;
    } else if (config.input_path) {
        LoadReport report;
        inst.reduced = load_and_reduce(*config.input_path, config.load, &report);
        inst.label = config.network_label.empty() ? config.input_path->stem().string()
                                                  : config.network_label;
        inst.n = report.n_input;
        inst.m = report.m_input;
    } else {
        throw DataError("experiment needs an input path or a generator spec");
    }
    return inst;
}

SelectionResult run_method(const ResistanceEngine& engine, Method method, std::size_t k,
                           std::uint64_t seed, std::uint64_t cap) {
    switch (method) {
        case Method::greedy: return greedy_rdm(engine, k);
        case Method::exact: return brute_force_rdm(engine, k, cap);
        case Method::random: return baseline_random(engine, k, seed);
        case Method::top_degree: return baseline_top_degree(engine, k);
        case Method::min_res: return baseline_min_res(engine, k);
    }
    throw DataError("unknown method");
}

} // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
    if (config.k_max < 1) throw DataError("k_max must be at least 1");
    if (config.methods.empty()) throw DataError("experiment needs at least one method");
    if (config.seeds.empty()) throw DataError("experiment needs at least one seed");

    std::vector<ResultRow> rows;

    for (const std::uint64_t seed : config.seeds) {
        const NetworkInstance inst = instantiate(config, seed);
        if (inst.reduced.order() < 2)
            throw DataError("largest strongly connected component of " + inst.label +
                            " has fewer than two vertices");
        if (config.k_max >= inst.reduced.order())
            throw DataError("k_max " + std::to_string(config.k_max) +
                            " must be below the component size " +
                            std::to_string(inst.reduced.order()));

        const ResistanceEngine engine(inst.reduced);

        for (const Method method : config.methods) {
            for (std::size_t k = 1; k <= config.k_max; ++k) {
                ResultRow row;
                row.network = inst.label;
                row.n = inst.n;
                row.m = inst.m;
                row.n_scc = inst.reduced.order();
                row.m_scc = inst.reduced.arc_count();
                row.method = method_name(method);
                row.k = k;
                row.seed = seed;

                if (method == Method::exact &&
                    binomial_capped(inst.reduced.order(), k) > config.brute_force_cap) {
                    row.objective = std::numeric_limits<double>::quiet_NaN();
                    rows.push_back(std::move(row));
                    continue;
                }

                const SelectionResult sel =
                    run_method(engine, method, k, seed, config.brute_force_cap);

                // Every written objective is validated against a fresh
                // group-resistance evaluation of the chosen set.
                const double check = group_resistance(engine.laplacian(), sel.chosen);
                if (!tol::close_rel(sel.objective, check, config.tolerances.algebraic))
                    throw NumericalError("objective validation failed for " + row.method +
                                         " on " + row.network);

                row.objective = sel.objective;
                row.chosen = sel.chosen_labels;
                row.wall_time_s = config.record_timings ? sel.wall_time_seconds : 0.0;
                rows.push_back(std::move(row));
            }
        }
    }

    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return std::tie(a.network, a.method, a.k, a.seed) <
               std::tie(b.network, b.method, b.k, b.seed);
    });

    if (config.output_path) {
        std::ofstream out(*config.output_path, std::ios::binary);
        if (!out) throw DataError("cannot write " + config.output_path->string());
        write_csv(out, rows);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
    out << "network,n,m,n_scc,m_scc,method,k,objective,chosen,seed,wall_time_s\n";
    for (const ResultRow& row : rows) {
        out << row.network << ',' << row.n << ',' << row.m << ',' << row.n_scc << ','
            << row.m_scc << ',' << row.method << ',' << row.k << ',' << format_real(row.objective)
            << ',';
        for (std::size_t i = 0; i < row.chosen.size(); ++i) {
            if (i) out << ';';
            out << row.chosen[i];
        }
        out << ',' << row.seed << ',' << format_real(row.wall_time_s) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

std::vector<ResultRow> parse_csv(std::istream& in) {
    std::vector<ResultRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 11) throw ParseError(line_no, "expected 11 CSV fields");

        ResultRow row;
        row.network = fields[0];
        row.n = std::stoull(fields[1]);
        row.m = std::stoull(fields[2]);
        row.n_scc = std::stoull(fields[3]);
        row.m_scc = std::stoull(fields[4]);
        row.method = fields[5];
        row.k = std::stoull(fields[6]);
        row.objective = std::stod(fields[7]);
        if (!fields[8].empty()) {
            std::istringstream cs(fields[8]);
            std::string tok;
            while (std::getline(cs, tok, ';')) row.chosen.push_back(std::stoll(tok));
        }
        row.seed = std::stoull(fields[9]);
        row.wall_time_s = std::stod(fields[10]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace dirres
