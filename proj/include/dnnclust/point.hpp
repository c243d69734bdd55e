#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace dnnclust {

/// Vertex id within a point set / graph. -1 is used as "none" (root, boundary).
using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

/// A 2D data point. Coordinates must be finite; NaN/infinity are rejected at
/// the ingestion boundaries (file loaders, generators, builders).
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

inline bool is_finite(const Point2& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

using PointList = std::vector<Point2>;

} // namespace dnnclust
