#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphcalc/graph.hpp"

namespace graphcalc {

// Tab-separated edge list "i<TAB>j<TAB>omega", 0-indexed, lines starting
// with # and blank lines skipped. n is 1 + the largest index mentioned.
struct EdgeList {
    int n = 0;
    std::vector<WeightedEdge> edges;
};

EdgeList load_edge_list(const std::string& path);

// Tab-separated "i<TAB>mu" per line, same comment rules.
std::map<int, double> load_measure(const std::string& path);

// Header-free comma-separated matrix; all rows must have equal width.
Eigen::MatrixXd load_matrix_csv(const std::string& path);

// Builds a graph from an edge list plus exactly one measure source: an
// explicit per-node file or a preset (which ignores the file's weights).
WeightedGraph load_graph(const std::string& edge_path,
                         const std::optional<std::string>& measure_path,
                         const std::optional<Preset>& preset);

// %.17g rendering; parses back to the identical double.
std::string fmt(double x);

// Writes to a sibling temp file and renames over path.
void atomic_write_text(const std::string& path, const std::string& text);

void save_edge_list(const WeightedGraph& g, const std::string& path);
void save_measure(const WeightedGraph& g, const std::string& path);
void save_matrix_csv(const Eigen::MatrixXd& x, const std::string& path);

Preset parse_preset(const std::string& name);  // throws ParseError

}  // namespace graphcalc
