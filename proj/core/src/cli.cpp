#include "dirres/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirres/edge_list_io.hpp"
#include "dirres/errors.hpp"
#include "dirres/experiment.hpp"
#include "dirres/generators.hpp"
#include "dirres/rdm.hpp"
#include "dirres/resistance.hpp"
#include "dirres/walk_oracle.hpp"

namespace dirres {

namespace {

struct GraphInput {
    std::string input;
    std::string gen_model;
    std::size_t n = 50;
    std::size_t ws_k = 10;
    double p = -1.0;  // model default when unset
    double b = 1.0;
    std::size_t sf_m = 300;
    double alpha_out = 0.5;
    double alpha_in = 0.5;
    std::uint64_t seed = 0;
    bool weighted = true;
    bool keep_loops = false;
    double tolerance = 1e-8;
    std::string output;

    bool has_gen() const { return !gen_model.empty(); }
};

void add_common_options(CLI::App* cmd, GraphInput& in, bool needs_graph) {
    if (needs_graph) {
        cmd->add_option("--input", in.input, "edge list file (whitespace separated)");
        cmd->add_option("--gen", in.gen_model, "generator model: ws | er | sf")
            ->check(CLI::IsMember({"ws", "er", "sf"}));
        cmd->add_option("--n", in.n, "generator vertex count");
        cmd->add_option("--K", in.ws_k, "ws: neighbors per lap");
        cmd->add_option("--p", in.p, "ws rewire probability / er arc probability");
        cmd->add_option("--b", in.b, "ws out-direction probability");
        cmd->add_option("--m", in.sf_m, "sf: number of endpoint draws");
        cmd->add_option("--a-out", in.alpha_out, "sf: out-weight exponent");
        cmd->add_option("--a-in", in.alpha_in, "sf: in-weight exponent");
        cmd->add_flag("--weighted,!--binarize", in.weighted,
                      "parse third-column weights (default) / force unit weights");
        cmd->add_flag("--keep-loops", in.keep_loops, "keep self-loops instead of dropping them");
    }
    cmd->add_option("--seed", in.seed, "random seed");
    cmd->add_option("--tolerance", in.tolerance, "algebraic validation tolerance");
    cmd->add_option("--output", in.output, "output file (default: standard output)");
}

std::filesystem::path resolve_input_path(const std::string& input) {
    std::filesystem::path path(input);
    if (std::filesystem::exists(path)) return path;
    if (const char* dir = std::getenv("DIRRES_DATA_DIR")) {
        const std::filesystem::path fallback = std::filesystem::path(dir) / path;
        if (std::filesystem::exists(fallback)) return fallback;
    }
    throw DataError("cannot find input file " + input);
}

GenSpec gen_spec_from(const GraphInput& in) {
    GenSpec spec;
    spec.n = in.n;
    spec.seed = in.seed;
    if (in.gen_model == "ws") {
        spec.model = GenModel::ws;
        spec.ws_neighbors = in.ws_k;
        spec.ws_rewire_p = in.p < 0.0 ? 0.5 : in.p;
        spec.ws_out_prob = in.b;
    } else if (in.gen_model == "er") {
        spec.model = GenModel::er;
        spec.er_arc_p = in.p < 0.0 ? 0.15 : in.p;
    } else if (in.gen_model == "sf") {
        spec.model = GenModel::sf;
        spec.sf_arc_draws = in.sf_m;
        spec.sf_alpha_out = in.alpha_out;
        spec.sf_alpha_in = in.alpha_in;
    } else {
        throw DataError("unknown generator model '" + in.gen_model + "'");
    }
    return spec;
}

struct LoadedGraph {
    Digraph reduced;
    std::size_t n_input = 0;
    std::size_t m_input = 0;
};

LoadedGraph load_graph(const GraphInput& in, std::ostream& err) {
    if (in.has_gen() == !in.input.empty())
        throw DataError("exactly one of --input and --gen is required");

    LoadedGraph loaded;
    if (in.has_gen()) {
        const Digraph full = generate(gen_spec_from(in));
        loaded.n_input = full.order();
        loaded.m_input = full.arc_count();
        loaded.reduced = largest_scc(full).graph;
    } else {
        LoadOptions options;
        options.parse.weighted = in.weighted;
        options.keep_loops = in.keep_loops;
        LoadReport report;
        loaded.reduced = load_and_reduce(resolve_input_path(in.input), options, &report);
        loaded.n_input = report.n_input;
        loaded.m_input = report.m_input;
    }
    if (loaded.reduced.order() < loaded.n_input)
        err << "note: using largest strongly connected component (" << loaded.reduced.order()
            << " of " << loaded.n_input << " vertices)\n";
    return loaded;
}

std::size_t internal_id(const Digraph& g, long long label) {
    const auto id = g.find_label(label);
    if (!id)
        throw DataError("vertex " + std::to_string(label) +
                        " is not in the largest strongly connected component");
    return *id;
}

std::vector<std::size_t> internal_ids(const Digraph& g, const std::vector<long long>& labels) {
    std::vector<std::size_t> ids;
    ids.reserve(labels.size());
    for (long long l : labels) ids.push_back(internal_id(g, l));
    return ids;
}

std::ostream& value_line(std::ostream& out, double value) {
    return out << format_real(value) << '\n';
}

void print_estimate(std::ostream& out, const WalkEstimate& e) {
    out << e.quantity << " mean=" << format_real(e.mean) << " std_error=" << format_real(e.std_error)
        << " samples=" << e.samples;
    if (!e.valid) out << " (invalid: step cap exceeded)";
    out << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"resistance distances, Kirchhoff indices and resistance-minimizing vertex"
                 " groups on strongly connected weighted digraphs"};
    app.require_subcommand(1);

    GraphInput in;

    // resist
    auto* resist = app.add_subcommand("resist", "pairwise resistance distance");
    std::vector<long long> pair;
    resist->add_option("--pair", pair, "vertex pair (original labels)")->expected(2)->required();
    add_common_options(resist, in, true);

    // node-res
    auto* node_res = app.add_subcommand("node-res", "resistance distance of one vertex");
    long long vertex = 0;
    node_res->add_option("--vertex", vertex, "vertex (original label)")->required();
    add_common_options(node_res, in, true);

    // kirchhoff
    auto* kirchhoff = app.add_subcommand("kirchhoff", "Kirchhoff index");
    bool multiplicative = false;
    kirchhoff->add_flag("--multiplicative", multiplicative,
                        "report the multiplicative (stationary-weighted) index");
    add_common_options(kirchhoff, in, true);

    // kemeny
    auto* kemeny = app.add_subcommand("kemeny", "Kemeny constant (cross-checked)");
    add_common_options(kemeny, in, true);

    // group
    auto* group = app.add_subcommand("group", "group resistance distance");
    std::vector<long long> group_set;
    long long point = -1;
    group->add_option("--set", group_set, "vertex group (original labels)")
        ->required()
        ->delimiter(',');
    group->add_option("--point", point, "report the vertex-to-group resistance for this vertex");
    add_common_options(group, in, true);

    // rdm
    auto* rdm = app.add_subcommand("rdm", "resistance distance minimization");
    std::size_t k_max = 6;
    std::vector<std::string> methods{"greedy"};
    std::vector<std::uint64_t> seeds;
    std::uint64_t cap = tol::kBruteForceCap;
    bool timings = false;
    rdm->add_option("--k", k_max, "selection sizes 1..k");
    rdm->add_option("--method", methods, "greedy | exact | random | top-degree | min-res")
        ->delimiter(',');
    rdm->add_option("--seeds", seeds, "seed list (default: the --seed value)")->delimiter(',');
    rdm->add_option("--cap", cap, "brute-force subset cap");
    rdm->add_flag("--timings", timings, "record wall times (breaks byte-identical reruns)");
    add_common_options(rdm, in, true);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a model digraph and write its edge list");
    add_common_options(gen, in, true);

    // scc
    auto* scc = app.add_subcommand("scc", "report n m n' m' of the largest component");
    add_common_options(scc, in, true);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo random-walk estimates");
    std::string quantity;
    long long sim_source = 0;
    long long sim_target = -1;
    long long sim_avoid = -1;
    std::vector<long long> sim_set;
    std::size_t walks = 100000;
    simulate
        ->add_option("--quantity", quantity,
                     "escape | hitting | commute | detour | return | visit-before")
        ->required()
        ->check(CLI::IsMember({"escape", "hitting", "commute", "detour", "return", "visit-before"}));
    simulate->add_option("--source", sim_source, "walk start (original label)")->required();
    simulate->add_option("--target", sim_target, "target vertex (original label)");
    simulate->add_option("--avoid", sim_avoid, "second target for visit-before");
    simulate->add_option("--set", sim_set, "target/transit vertex set")->delimiter(',');
    simulate->add_option("--walks", walks, "number of walks");
    add_common_options(simulate, in, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 1;
    }

    try {
        auto open_output = [&](std::ofstream& file) -> std::ostream& {
            if (in.output.empty()) return out;
            file.open(in.output, std::ios::binary);
            if (!file) throw DataError("cannot write " + in.output);
            return file;
        };

        if (resist->parsed()) {
            const LoadedGraph g = load_graph(in, err);
            const ResistanceEngine engine(g.reduced);
            value_line(out, engine.resistance(internal_id(g.reduced, pair[0]),
                                              internal_id(g.reduced, pair[1])));
        } else if (node_res->parsed()) {
            const LoadedGraph g = load_graph(in, err);
            const ResistanceEngine engine(g.reduced);
            value_line(out, engine.vertex_resistance(internal_id(g.reduced, vertex)));
        } else if (kirchhoff->parsed()) {
            const LoadedGraph g = load_graph(in, err);
            const ResistanceEngine engine(g.reduced);
            value_line(out, multiplicative ? engine.multiplicative_kirchhoff_index()
                                           : engine.kirchhoff_index());
        } else if (kemeny->parsed()) {
            const LoadedGraph g = load_graph(in, err);
            const ResistanceEngine engine(g.reduced);
            value_line(out, kemeny_constant_checked(engine));
        } else if (group->parsed()) {
            const LoadedGraph g = load_graph(in, err);
            const std::vector<std::size_t> ids = internal_ids(g.reduced, group_set);
            if (group->count("--point") > 0)
                value_line(out, group_resistance_point(g.reduced, internal_id(g.reduced, point), ids));
            else
                value_line(out, group_resistance(g.reduced, ids));
        } else if (rdm->parsed()) {
            ExperimentConfig config;
            if (in.has_gen()) {
                if (!in.input.empty()) throw DataError("exactly one of --input and --gen is required");
                config.gen = gen_spec_from(in);
            } else if (!in.input.empty()) {
                config.input_path = resolve_input_path(in.input);
                config.load.parse.weighted = in.weighted;
                config.load.keep_loops = in.keep_loops;
            } else {
                throw DataError("exactly one of --input and --gen is required");
            }
            config.k_max = k_max;
            for (const std::string& name : methods) {
                const auto m = method_from_name(name);
                if (!m) throw DataError("unknown method '" + name + "'");
                config.methods.push_back(*m);
            }
            config.seeds = seeds.empty() ? std::vector<std::uint64_t>{in.seed} : seeds;
            config.brute_force_cap = cap;
            config.tolerances.algebraic = in.tolerance;
            config.record_timings = timings;
            if (!in.output.empty()) config.output_path = in.output;

            const std::vector<ResultRow> rows = run_experiment(config);
            if (in.output.empty()) write_csv(out, rows);
        } else if (gen->parsed()) {
            if (!in.has_gen()) throw DataError("gen requires --gen");
            const Digraph full = generate(gen_spec_from(in));
            std::ofstream file;
            write_edge_list(open_output(file), full);
        } else if (scc->parsed()) {
            const LoadedGraph g = load_graph(in, err);
            out << g.n_input << ' ' << g.m_input << ' ' << g.reduced.order() << ' '
                << g.reduced.arc_count() << '\n';
        } else if (simulate->parsed()) {
            const LoadedGraph g = load_graph(in, err);
            const WalkSimulator sim(g.reduced);
            const std::size_t src = internal_id(g.reduced, sim_source);

            auto target_set = [&]() -> std::vector<std::size_t> {
                if (!sim_set.empty()) return internal_ids(g.reduced, sim_set);
                if (sim_target >= 0) return {internal_id(g.reduced, sim_target)};
                throw DataError("this quantity needs --target or --set");
            };
            auto transit_set = [&]() -> std::vector<std::size_t> {
                if (sim_set.empty()) throw DataError("detour needs --set (the transit vertices)");
                return internal_ids(g.reduced, sim_set);
            };

            WalkEstimate e;
            if (quantity == "escape")
                e = sim.escape_probability(src, target_set(), walks, in.seed);
            else if (quantity == "hitting")
                e = sim.hitting_time(src, internal_id(g.reduced, sim_target), walks, in.seed);
            else if (quantity == "commute")
                e = sim.commute_time(src, target_set(), walks, in.seed);
            else if (quantity == "detour")
                e = sim.detour_time(src, transit_set(), internal_id(g.reduced, sim_target), walks,
                                    in.seed);
            else if (quantity == "return")
                e = sim.detour_time(src, {src}, src, walks, in.seed);
            else if (quantity == "visit-before")
                e = sim.visit_before(src, internal_id(g.reduced, sim_target),
                                     internal_id(g.reduced, sim_avoid), walks, in.seed);
            print_estimate(out, e);
        }
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

} // namespace dirres
