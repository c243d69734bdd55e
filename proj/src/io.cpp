#include "dnnclust/io.hpp"

#include "dnnclust/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace dnnclust {
namespace {

// Split on commas and/or whitespace, collapsing runs; '#' starts a comment.
std::vector<std::string_view> split_loose(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i])) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && !is_sep(line[i]) && line[i] != '#') ++i;
        fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

// Strict comma split that preserves empty fields (result CSV has an empty
// parent column for roots).
std::vector<std::string_view> split_commas(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

double parse_double(std::string_view s, long line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("expected a number, got '" + std::string(s) + "'", line_no);
    }
    if (!std::isfinite(v)) {
        throw ParseError("non-finite value '" + std::string(s) + "'", line_no);
    }
    return v;
}

VertexId parse_id(std::string_view s, long line_no) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("expected an integer, got '" + std::string(s) + "'", line_no);
    }
    if (v < std::numeric_limits<VertexId>::min() || v > std::numeric_limits<VertexId>::max()) {
        throw ParseError("integer out of range: '" + std::string(s) + "'", line_no);
    }
    return static_cast<VertexId>(v);
}

constexpr const char* kResultHeader = "index,x,y,potential,parent,root,cluster";

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out) throw IoError("write failed for '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

LoadedPoints parse_points_csv(const std::string& text) {
    LoadedPoints out;
    std::size_t expected_fields = 0;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_loose(line);
        if (fields.empty()) continue;
        if (fields.size() != 2 && fields.size() != 3) {
            throw ParseError("expected 'x y' or 'x y label', got " +
                                 std::to_string(fields.size()) + " fields",
                             line_no);
        }
        if (expected_fields == 0) {
            expected_fields = fields.size();
            if (expected_fields == 3) out.labels.emplace();
        } else if (fields.size() != expected_fields) {
            throw ParseError("inconsistent field count (expected " +
                                 std::to_string(expected_fields) + ")",
                             line_no);
        }
        Point2 p{parse_double(fields[0], line_no), parse_double(fields[1], line_no)};
        out.points.push_back(p);
        if (out.labels) out.labels->push_back(parse_id(fields[2], line_no));
    }
    if (out.points.empty()) throw ParseError("no data rows found");
    return out;
}

LoadedPoints load_points_csv(const std::string& path) { return parse_points_csv(read_file(path)); }

std::string points_csv_text(const PointList& points, const std::vector<VertexId>* labels) {
    std::string out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += format_double(points[i].x);
        out += ',';
        out += format_double(points[i].y);
        if (labels) {
            out += ',';
            out += std::to_string((*labels)[i]);
        }
        out += '\n';
    }
    return out;
}

std::string result_csv_text(const ClusterResult& result) {
    // representative original index of each unique point (the smallest one)
    std::vector<VertexId> rep(result.dedup.unique_points.size(), kNoVertex);
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        auto u = static_cast<std::size_t>(result.dedup.remap[i]);
        if (rep[u] == kNoVertex) rep[u] = static_cast<VertexId>(i);
    }

    std::string out = kResultHeader;
    out += '\n';
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        auto u = static_cast<std::size_t>(result.dedup.remap[i]);
        out += std::to_string(i);
        out += ',';
        out += format_double(result.points[i].x);
        out += ',';
        out += format_double(result.points[i].y);
        out += ',';
        out += format_double(result.field.values[u]);
        out += ',';
        VertexId parent = result.forest.parent[u];
        if (parent != kNoVertex) out += std::to_string(rep[static_cast<std::size_t>(parent)]);
        out += ',';
        out += std::to_string(rep[static_cast<std::size_t>(result.labeling.root_of[u])]);
        out += ',';
        out += std::to_string(result.labels[i]);
        out += '\n';
    }
    return out;
}

void write_result_csv(const std::string& path, const ClusterResult& result) {
    atomic_write_file(path, result_csv_text(result));
}

std::vector<ResultRow> parse_result_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty result file");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kResultHeader) {
        throw ParseError("bad header, expected '" + std::string(kResultHeader) + "'", line_no);
    }
    std::vector<ResultRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto f = split_commas(line);
        if (f.size() != 7) {
            throw ParseError("expected 7 columns, got " + std::to_string(f.size()), line_no);
        }
        ResultRow row;
        row.index = parse_id(f[0], line_no);
        row.point = {parse_double(f[1], line_no), parse_double(f[2], line_no)};
        row.potential = parse_double(f[3], line_no);
        if (!f[4].empty()) row.parent = parse_id(f[4], line_no);
        row.root = parse_id(f[5], line_no);
        row.cluster = parse_id(f[6], line_no);
        rows.push_back(row);
    }
    if (rows.empty()) throw ParseError("no data rows found");
    return rows;
}

std::vector<ResultRow> load_result_csv(const std::string& path) {
    return parse_result_csv(read_file(path));
}

std::string edge_list_text(const NeighborGraph& graph) {
    std::string out;
    for (auto [i, j] : graph.edges()) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += '\n';
    }
    return out;
}

std::string graph_json_text(const PointList& points, const NeighborGraph& graph) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const auto& p : points) j["points"].push_back({p.x, p.y});
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : graph.edges()) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

std::vector<std::pair<VertexId, VertexId>> load_edge_list(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_loose(line);
        if (fields.empty()) continue;
        if (fields.size() != 2) {
            throw ParseError("expected 'i j' edge row", line_no);
        }
        edges.emplace_back(parse_id(fields[0], line_no), parse_id(fields[1], line_no));
    }
    return edges;
}

} // namespace dnnclust
