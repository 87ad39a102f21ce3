#include "dirres/edge_list_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "dirres/errors.hpp"

namespace dirres {

namespace {

bool parse_int(std::string_view token, long long& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_double(std::string_view token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t begin = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > begin) tokens.push_back(line.substr(begin, i - begin));
    }
    return tokens;
}

} // namespace

std::vector<EdgeTriple> parse_edge_list(std::string_view text, const ParseOptions& options) {
    std::vector<EdgeTriple> triples;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        ++line_no;
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t first = 0;
        while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
        if (first == line.size()) continue;
        if (options.comment_chars.find(line[first]) != std::string::npos) continue;

        const auto tokens = split_ws(line);
        if (tokens.size() != 2 && tokens.size() != 3)
            throw ParseError(line_no, "expected 2 or 3 whitespace-separated fields, got " +
                                          std::to_string(tokens.size()));

        EdgeTriple t;
        if (!parse_int(tokens[0], t.src)) throw ParseError(line_no, "bad source vertex id");
        if (!parse_int(tokens[1], t.dst)) throw ParseError(line_no, "bad target vertex id");
        t.weight = 1.0;
        if (tokens.size() == 3) {
            double w = 1.0;
            if (!parse_double(tokens[2], w)) throw ParseError(line_no, "bad edge weight");
            if (w < 0.0) throw ParseError(line_no, "negative edge weight");
            t.weight = options.weighted ? w : 1.0;
        }
        triples.push_back(t);
    }
    return triples;
}

Digraph load_and_reduce(const std::filesystem::path& path, const LoadOptions& options,
                        LoadReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const std::vector<EdgeTriple> triples = parse_edge_list(buffer.str(), options.parse);

    BuildOptions build_options;
    build_options.keep_loops = options.keep_loops;
    BuildReport build_report;
    const Digraph full = build_digraph(triples, build_options, &build_report);

    SccResult scc = largest_scc(full);
    if (report) {
        report->n_input = full.order();
        report->m_input = triples.size();
        report->n_scc = scc.graph.order();
        report->m_scc = scc.graph.arc_count();
        report->build = build_report;
    }
    return std::move(scc.graph);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
    for (const Arc& a : g.arcs())
        out << g.labels()[a.src] << ' ' << g.labels()[a.dst] << ' ' << format_real(a.weight)
            << '\n';
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace dirres
