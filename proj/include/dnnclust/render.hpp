#pragma once

#include "dnnclust/io.hpp"
#include "dnnclust/point.hpp"

#include <string>
#include <vector>

namespace dnnclust {

/// Options for the SVG figure renderer.
struct RenderOptions {
    enum class ColorBy { Cluster, Potential };

    ColorBy color_by = ColorBy::Cluster;
    double point_radius = 3.0;
    bool draw_forest = true;      // directed parent edges as arrows
    bool draw_graph_edges = true; // underlying proximity graph as thin segments
};

/// Render a clustering result as a standalone SVG. Points are filled by
/// cluster (categorical palette) or by potential (blue-to-red gradient);
/// forest edges are drawn as arrows into the parent, optional graph edges as
/// thin gray segments underneath. Output bytes are deterministic for
/// identical inputs.
std::string render_svg(const std::vector<ResultRow>& rows,
                       const std::vector<std::pair<VertexId, VertexId>>* graph_edges,
                       const RenderOptions& opts);

} // namespace dnnclust
