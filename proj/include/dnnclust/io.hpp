#pragma once

#include "dnnclust/eval.hpp"
#include "dnnclust/geometry.hpp"
#include "dnnclust/point.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dnnclust {

/// A loaded point file: `x y` or `x y label` rows.
struct LoadedPoints {
    PointList points;
    std::optional<std::vector<VertexId>> labels;
};

/// Parse a point file. Rows are comma- or whitespace-delimited `x y [label]`;
/// `#` starts a comment; blank lines are skipped. Every data row must have
/// the same number of fields (2 or 3). Throws ParseError with the offending
/// line number on malformed rows or non-finite values, IoError when the file
/// cannot be read.
LoadedPoints load_points_csv(const std::string& path);
LoadedPoints parse_points_csv(const std::string& text); // same, from memory

/// One row of a result CSV (schema: index,x,y,potential,parent,root,cluster).
struct ResultRow {
    VertexId index = 0;
    Point2 point;
    double potential = 0.0;
    std::optional<VertexId> parent; // empty for roots
    VertexId root = 0;
    VertexId cluster = 0;
};

/// Serialize a clustering result. Floating-point columns use 17 significant
/// digits so a write/load round trip is lossless. parent/root columns refer
/// to original indices (the representative of a duplicate group is its
/// smallest original index).
std::string result_csv_text(const ClusterResult& result);
void write_result_csv(const std::string& path, const ClusterResult& result);

/// Parse a result CSV written by write_result_csv.
std::vector<ResultRow> load_result_csv(const std::string& path);
std::vector<ResultRow> parse_result_csv(const std::string& text);

/// Point CSV used by the dataset generator: `x,y,label` rows, 17 significant
/// digits.
std::string points_csv_text(const PointList& points, const std::vector<VertexId>* labels);

/// Edge list: one `i j` pair per line with i < j, sorted lexicographically.
std::string edge_list_text(const NeighborGraph& graph);

/// Graph as JSON with `points` and `edges` arrays (for the SVG renderer and
/// other tooling).
std::string graph_json_text(const PointList& points, const NeighborGraph& graph);

/// Parse an edge list file back into pairs.
std::vector<std::pair<VertexId, VertexId>> load_edge_list(const std::string& path);

/// Write a file atomically: the content goes to `path + ".tmp"` first and is
/// renamed into place, so failed runs never leave partial output.
void atomic_write_file(const std::string& path, const std::string& content);

/// Read a whole file; throws IoError when it cannot be opened.
std::string read_file(const std::string& path);

/// Shortest decimal form that round-trips the double (17 significant digits).
std::string format_double(double v);

} // namespace dnnclust
