#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dirres/cli.hpp"
#include "dirres/edge_list_io.hpp"
#include "dirres/errors.hpp"
#include "dirres/experiment.hpp"
#include "support.hpp"

using namespace dirres;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

} // namespace

TEST_CASE("parse_edge_list handles comments and default weights") {
    const auto triples = parse_edge_list("# c\n0 1\n1 0");
    REQUIRE(triples.size() == 2);
    CHECK(triples[0].src == 0);
    CHECK(triples[0].dst == 1);
    CHECK(triples[0].weight == 1.0);
}

TEST_CASE("parse_edge_list reads explicit weights and percent comments") {
    const auto triples = parse_edge_list("% k\n1 2 0.6");
    REQUIRE(triples.size() == 1);
    CHECK(triples[0].src == 1);
    CHECK(triples[0].dst == 2);
    CHECK(triples[0].weight == doctest::Approx(0.6));
}

TEST_CASE("parse_edge_list reports malformed lines with their number") {
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1 x"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n0\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2 3"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 -2.0"), ParseError);
}

TEST_CASE("parse_edge_list binarizes weights on request") {
    ParseOptions options;
    options.weighted = false;
    const auto triples = parse_edge_list("1 2 0.6\n2 1 0.8", options);
    CHECK(triples[0].weight == 1.0);
    CHECK(triples[1].weight == 1.0);
}

TEST_CASE("parse_edge_list handles CRLF and blank lines") {
    const auto triples = parse_edge_list("0 1\r\n\r\n1 0\r\n");
    CHECK(triples.size() == 2);
}

TEST_CASE("parse_edge_list honors custom comment characters") {
    ParseOptions options;
    options.comment_chars = ";";
    const auto triples = parse_edge_list("; note\n0 1\n", options);
    CHECK(triples.size() == 1);
    CHECK_THROWS_AS(parse_edge_list("# note\n0 1\n", options), ParseError);
}

TEST_CASE("load_and_reduce reports input and component sizes") {
    const auto path = temp_file("dirres_io_test1.txt",
                                "# three-cycle plus dangling arc and loop\n"
                                "0 1\n1 2\n2 0\n1 3\n3 3\n");
    LoadReport report;
    const Digraph g = load_and_reduce(path, {}, &report);
    CHECK(report.n_input == 4);
    CHECK(report.m_input == 5);
    CHECK(report.build.loops_dropped == 1);
    CHECK(report.n_scc == 3);
    CHECK(report.m_scc == 3);
    CHECK(g.order() == 3);
    std::filesystem::remove(path);
}

TEST_CASE("edge list writer emits original labels") {
    const Digraph g = build_digraph({{4, 9, 1.5}, {9, 4, 2.0}});
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "4 9 1.5\n9 4 2\n");
}

TEST_CASE("format_real round-trips doubles") {
    for (double v : {1.0, 0.1, 2.0 / 3.0, 367.5, 1e-12, 123456.789}) {
        CHECK(std::stod(format_real(v)) == v);
    }
}

TEST_CASE("CSV rows round-trip exactly") {
    std::vector<ResultRow> rows(2);
    rows[0] = {"ws-n50", 50, 500, 50, 500, "greedy", 3, 12.34567890123456789, {4, 7, 9}, 11, 0.0};
    rows[1] = {"er-n50", 50, 301, 49, 280, "random", 1, 2.0 / 3.0, {12}, 7, 0.25};

    std::ostringstream out;
    write_csv(out, rows);
    std::istringstream in(out.str());
    const std::vector<ResultRow> parsed = parse_csv(in);

    REQUIRE(parsed.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(parsed[i].network == rows[i].network);
        CHECK(parsed[i].n == rows[i].n);
        CHECK(parsed[i].m == rows[i].m);
        CHECK(parsed[i].n_scc == rows[i].n_scc);
        CHECK(parsed[i].m_scc == rows[i].m_scc);
        CHECK(parsed[i].method == rows[i].method);
        CHECK(parsed[i].k == rows[i].k);
        CHECK(parsed[i].objective == rows[i].objective);
        CHECK(parsed[i].chosen == rows[i].chosen);
        CHECK(parsed[i].seed == rows[i].seed);
        CHECK(parsed[i].wall_time_s == rows[i].wall_time_s);
    }
}

TEST_CASE("experiment rows obey the greedy-vs-baseline ordering on one seed") {
    ExperimentConfig config;
    GenSpec spec;
    spec.model = GenModel::ws;
    config.gen = spec;
    config.k_max = 4;
    config.methods = {Method::greedy, Method::random, Method::top_degree, Method::min_res};
    config.seeds = {3};

    const auto rows = run_experiment(config);
    CHECK(rows.size() == 16);

    auto objective_of = [&](const std::string& method, std::size_t k) {
        for (const ResultRow& row : rows)
            if (row.method == method && row.k == k) return row.objective;
        FAIL("missing row");
        return 0.0;
    };
    for (std::size_t k = 1; k <= 4; ++k) {
        const double greedy = objective_of("greedy", k);
        CHECK(greedy <= objective_of("random", k) + 1e-9);
        CHECK(greedy <= objective_of("top-degree", k) + 1e-9);
        CHECK(greedy <= objective_of("min-res", k) + 1e-9);
    }
}

TEST_CASE("experiment with k_max 1 gives greedy, exact and min-res the same objective") {
    ExperimentConfig config;
    GenSpec spec;
    spec.model = GenModel::er;
    spec.n = 20;
    spec.er_arc_p = 0.3;
    config.gen = spec;
    config.k_max = 1;
    config.methods = {Method::greedy, Method::exact, Method::min_res};
    config.seeds = {5};

    const auto rows = run_experiment(config);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].objective == doctest::Approx(rows[1].objective).epsilon(1e-10));
    CHECK(rows[1].objective == doctest::Approx(rows[2].objective).epsilon(1e-10));
}

TEST_CASE("experiments are byte-identical across reruns") {
    ExperimentConfig config;
    GenSpec spec;
    spec.model = GenModel::sf;
    config.gen = spec;
    config.k_max = 3;
    config.methods = {Method::greedy, Method::random};
    config.seeds = {1, 2};

    std::ostringstream a;
    write_csv(a, run_experiment(config));
    std::ostringstream b;
    write_csv(b, run_experiment(config));
    CHECK(a.str() == b.str());
    CHECK(a.str().find("nan") == std::string::npos);
}

TEST_CASE("exact rows above the cap are skipped, not fatal") {
    ExperimentConfig config;
    GenSpec spec;
    spec.model = GenModel::er;
    spec.n = 30;
    spec.er_arc_p = 0.25;
    config.gen = spec;
    config.k_max = 3;
    config.methods = {Method::exact};
    config.seeds = {9};
    config.brute_force_cap = 40; // allows k = 1, forbids k = 2 and 3

    const auto rows = run_experiment(config);
    REQUIRE(rows.size() == 3);
    CHECK_FALSE(rows[0].skipped());
    CHECK(rows[1].skipped());
    CHECK(rows[2].skipped());
    CHECK(rows[1].chosen.empty());
}

TEST_CASE("cli resist prints the pairwise resistance") {
    const auto path = temp_file("dirres_cli_pair.txt", "0 1\n1 0\n");
    std::string out;
    const int code = run({"resist", "--input", path.string(), "--pair", "0", "1"}, &out);
    CHECK(code == 0);
    CHECK(std::stod(out) == doctest::Approx(1.0).epsilon(1e-10));
    std::filesystem::remove(path);
}

TEST_CASE("cli scc prints the four counts") {
    const auto path = temp_file("dirres_cli_scc.txt", "0 1\n1 2\n2 0\n1 3\n");
    std::string out;
    const int code = run({"scc", "--input", path.string()}, &out);
    CHECK(code == 0);
    CHECK(out == "4 4 3 3\n");
    std::filesystem::remove(path);
}

TEST_CASE("cli rdm streams CSV rows") {
    std::string out;
    const int code = run({"rdm", "--gen", "er", "--n", "20", "--p", "0.3", "--k", "2", "--method",
                          "greedy", "--seed", "7"},
                         &out);
    CHECK(code == 0);
    CHECK(out.rfind("network,n,m,n_scc,m_scc,method,k,objective,chosen,seed,wall_time_s\n", 0) ==
          0);
    std::istringstream in(out);
    const auto rows = parse_csv(in);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].method == "greedy");
    CHECK(rows[0].seed == 7);
}

TEST_CASE("cli exit codes") {
    std::string out, err;
    CHECK(run({"frobnicate"}, &out, &err) == 1);

    CHECK(run({"scc", "--input", "/nonexistent/file.txt"}, &out, &err) == 2);
    CHECK(err.find("error") != std::string::npos);

    // Vertex outside the component is a data error.
    const auto path = temp_file("dirres_cli_exit.txt", "0 1\n1 0\n1 2\n");
    CHECK(run({"resist", "--input", path.string(), "--pair", "0", "2"}, &out, &err) == 2);
    std::filesystem::remove(path);
}

TEST_CASE("cli help succeeds") {
    std::string out;
    CHECK(run({"--help"}, &out) == 0);
    CHECK(out.find("resist") != std::string::npos);
    CHECK(out.find("simulate") != std::string::npos);
}

TEST_CASE("cli kemeny and kirchhoff agree with each other") {
    std::string kem, kir;
    CHECK(run({"kemeny", "--gen", "ws", "--n", "20", "--K", "3", "--seed", "2"}, &kem) == 0);
    CHECK(run({"kirchhoff", "--multiplicative", "--gen", "ws", "--n", "20", "--K", "3", "--seed",
               "2"},
              &kir) == 0);
    // Multiplicative index = volume * Kemeny constant; volume is 20*3 = 60.
    CHECK(std::stod(kir) == doctest::Approx(60.0 * std::stod(kem)).epsilon(1e-8));
}

TEST_CASE("cli group matches the library value") {
    std::string out;
    CHECK(run({"group", "--set", "1,2", "--gen", "er", "--n", "15", "--p", "0.3", "--seed", "4"},
              &out) == 0);
    GenSpec spec;
    spec.model = GenModel::er;
    spec.n = 15;
    spec.er_arc_p = 0.3;
    spec.seed = 4;
    const Digraph g = largest_scc(generate(spec)).graph;
    const std::size_t a = *g.find_label(1);
    const std::size_t b = *g.find_label(2);
    CHECK(std::stod(out) == doctest::Approx(group_resistance(g, {a, b})).epsilon(1e-10));
}

TEST_CASE("cli simulate reports a labeled estimate") {
    std::string out;
    CHECK(run({"simulate", "--quantity", "hitting", "--source", "0", "--target", "2", "--walks",
               "200", "--gen", "ws", "--n", "12", "--K", "2", "--seed", "3"},
              &out) == 0);
    CHECK(out.find("mean=") != std::string::npos);
    CHECK(out.find("samples=200") != std::string::npos);
}

TEST_CASE("cli gen writes a parseable deterministic edge list") {
    std::string a, b;
    CHECK(run({"gen", "--gen", "sf", "--n", "30", "--m", "100", "--seed", "5"}, &a) == 0);
    CHECK(run({"gen", "--gen", "sf", "--n", "30", "--m", "100", "--seed", "5"}, &b) == 0);
    CHECK(a == b);
    const auto triples = parse_edge_list(a);
    CHECK(!triples.empty());
}

TEST_CASE("cli keep-loops retains self-loops through the pipeline") {
    const auto path = temp_file("dirres_cli_loops.txt", "0 0 2\n0 1 1\n1 0 1\n");
    std::string dropped, kept;
    CHECK(run({"scc", "--input", path.string()}, &dropped) == 0);
    CHECK(dropped == "2 3 2 2\n");
    CHECK(run({"scc", "--input", path.string(), "--keep-loops"}, &kept) == 0);
    CHECK(kept == "2 3 2 3\n");

    // A resistance query still works on the loopy chain.
    std::string out;
    CHECK(run({"resist", "--input", path.string(), "--keep-loops", "--pair", "0", "1"}, &out) == 0);
    CHECK(std::stod(out) > 0.0);
    std::filesystem::remove(path);
}

TEST_CASE("DIRRES_DATA_DIR resolves bare file names") {
    const auto dir = std::filesystem::temp_directory_path() / "dirres_data_dir_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "tiny.txt");
        out << "0 1\n1 0\n";
    }
    setenv("DIRRES_DATA_DIR", dir.string().c_str(), 1);
    std::string out;
    CHECK(run({"scc", "--input", "tiny.txt"}, &out) == 0);
    CHECK(out == "2 2 2 2\n");
    unsetenv("DIRRES_DATA_DIR");
    std::filesystem::remove_all(dir);
}
