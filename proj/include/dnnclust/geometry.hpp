#pragma once

#include "dnnclust/point.hpp"

#include <array>
#include <vector>

namespace dnnclust {

/// A Delaunay triangulation of a planar point set.
///
/// Invariants:
///  - every triangle is counter-clockwise and non-degenerate;
///  - no input vertex lies strictly inside any triangle's circumcircle
///    (exact predicates, no tolerance);
///  - the triangles tile the convex hull of the points without overlap;
///  - `triangles` is in canonical order (smallest vertex rotated first,
///    then sorted), so identical inputs produce identical output.
struct Triangulation {
    PointList points;
    std::vector<std::array<VertexId, 3>> triangles;
    /// neighbors[t][k] is the triangle across the edge opposite triangles[t][k],
    /// or kNoTriangle when that edge is on the convex hull.
    std::vector<std::array<int, 3>> neighbors;

    static constexpr int kNoTriangle = -1;
};

/// Undirected adjacency over vertex ids [0, n). Symmetric, no self-loops,
/// neighbor lists sorted ascending.
struct NeighborGraph {
    VertexId n = 0;
    std::vector<std::vector<VertexId>> adj;

    std::size_t edge_count() const;
    /// All edges as (i, j) with i < j, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    bool has_edge(VertexId i, VertexId j) const;
};

/// Result of merging exact coordinate duplicates.
struct DedupMap {
    PointList unique_points;
    std::vector<VertexId> remap; // original index -> unique index
};

/// Merge exact coordinate duplicates, keeping first occurrences in order.
/// The representative of a duplicate group is the smallest original index.
/// No epsilon snapping: only numerically equal coordinates merge (with -0.0
/// treated as 0.0). Throws InvalidParameter on empty input or non-finite
/// coordinates.
DedupMap dedupe_points(const PointList& points);

/// Incremental (Bowyer-Watson) Delaunay triangulation with exact predicates.
///
/// Input points must be pairwise distinct (run dedupe_points first); throws
/// InvalidParameter otherwise. Throws DegenerateInput when fewer than three
/// distinct points are given or all points are collinear. Cocircular ties are
/// resolved by the symbolic perturbation described in predicates.hpp, making
/// the output deterministic.
Triangulation build_delaunay(const PointList& points);

/// Vertex adjacency of a triangulation: i and j are neighbors iff they share
/// a triangle edge.
NeighborGraph adjacency(const Triangulation& tri);

} // namespace dnnclust
