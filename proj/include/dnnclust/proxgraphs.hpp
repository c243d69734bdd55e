#pragma once

#include "dnnclust/geometry.hpp"
#include "dnnclust/metric.hpp"
#include "dnnclust/point.hpp"

#include <string>

namespace dnnclust {

/// Which proximity graph approximates the plane. For the Euclidean metric
/// EMST and RNG edges are subsets of the Delaunay edges, which is what makes
/// them drop-in comparison graphs.
struct GraphKind {
    enum class Type { Delaunay, Knn, Mst, Rng };

    Type type = Type::Delaunay;
    int k = 0; // only for Knn, >= 1

    static GraphKind delaunay() { return {Type::Delaunay, 0}; }
    static GraphKind knn(int k) { return {Type::Knn, k}; }
    static GraphKind mst() { return {Type::Mst, 0}; }
    static GraphKind rng() { return {Type::Rng, 0}; }

    std::string name() const;
};

/// How the directed k-NN relation is symmetrized into an undirected graph.
/// Union keeps an edge when either endpoint selects the other; Intersection
/// requires both. Union is the default.
enum class KnnSymmetrization { Union, Intersection };

/// Undirected k-nearest-neighbor graph. Ties at the k-th neighbor distance go
/// to the smaller vertex id. Requires 1 <= k < n.
NeighborGraph knn_graph(const PointList& points, int k, Metric metric,
                        KnnSymmetrization sym = KnnSymmetrization::Union);

/// Minimum spanning tree of the complete metric graph: n-1 edges, connected.
/// Equal-weight ties are broken by lexicographic edge id, making the tree the
/// unique minimum under the (weight, i, j) order. For the Euclidean metric the
/// spanning tree is computed over Delaunay edges (the EMST is a Delaunay
/// subgraph); other metrics and degenerate inputs use the quadratic
/// full-graph route.
NeighborGraph emst_graph(const PointList& points, Metric metric);

/// Relative neighborhood graph: edge (i, j) survives iff no witness w has
/// max(d(i,w), d(j,w)) < d(i,j) (open lune; boundary witnesses do not remove
/// the edge). Euclidean inputs filter Delaunay edges; other metrics and
/// degenerate inputs test all pairs. Requires n >= 2.
NeighborGraph rng_graph(const PointList& points, Metric metric);

/// Dispatch to the builder selected by `kind`.
NeighborGraph build_graph(const GraphKind& kind, const PointList& points, Metric metric,
                          KnnSymmetrization sym = KnnSymmetrization::Union);

} // namespace dnnclust
