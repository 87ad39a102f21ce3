#ifndef DIRRES_EDGE_LIST_IO_HPP_
#define DIRRES_EDGE_LIST_IO_HPP_

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dirres/digraph.hpp"

namespace dirres {

struct ParseOptions {
    // When false, any parsed weight is replaced by 1.0 (binarized ingestion).
    bool weighted = true;
    // Lines whose first non-blank character is one of these are skipped.
    std::string comment_chars = "#%";
};

// Whitespace-separated edge lists: 2-column lines get weight 1.0, 3-column
// lines carry an explicit weight. Malformed lines and negative weights are
// rejected with their line number.
std::vector<EdgeTriple> parse_edge_list(std::string_view text, const ParseOptions& options = {});

struct LoadOptions {
    ParseOptions parse;
    bool keep_loops = false;
};

struct LoadReport {
    std::size_t n_input = 0;  // vertices appearing in the file
    std::size_t m_input = 0;  // edge lines parsed
    std::size_t n_scc = 0;    // vertices in the largest strongly connected component
    std::size_t m_scc = 0;    // arcs in that component
    BuildReport build;
};

// parse -> build -> largest strongly connected component.
Digraph load_and_reduce(const std::filesystem::path& path, const LoadOptions& options = {},
                        LoadReport* report = nullptr);

// Arcs as "src dst weight" lines in original labels.
void write_edge_list(std::ostream& out, const Digraph& g);

// 17-significant-digit decimal form of a double ('.' separator); lossless
// for round-trips.
std::string format_real(double value);

} // namespace dirres

#endif // DIRRES_EDGE_LIST_IO_HPP_
