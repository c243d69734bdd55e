#pragma once

// Independent reference implementations used to check the library. Everything
// here is written for clarity over speed and deliberately avoids the library
// code paths it verifies: brute-force enumeration instead of incremental
// construction, rational arithmetic instead of expansion arithmetic, dense
// scans instead of graph filtering.

#include <dnnclust/geometry.hpp>
#include <dnnclust/metric.hpp>
#include <dnnclust/mixture.hpp>
#include <dnnclust/point.hpp>
#include <dnnclust/potential.hpp>

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracles {

using dnnclust::Metric;
using dnnclust::NeighborGraph;
using dnnclust::Point2;
using dnnclust::PointList;
using dnnclust::PotentialField;
using dnnclust::VertexId;

using EdgeSet = std::set<std::pair<VertexId, VertexId>>;

// --- exact predicates via arbitrary-precision rationals -------------------
int orient2d_rational(const Point2& a, const Point2& b, const Point2& c);
int incircle_rational(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

// --- geometry --------------------------------------------------------------
// Delaunay edges by enumerating candidate triangles and rejecting any whose
// circumcircle strictly contains another point. Exact predicates, O(n^4)
// worst case with early exit. Assumes distinct points.
EdgeSet delaunay_edges_bruteforce(const PointList& points);

// Same enumeration, returning the accepted triangles in canonical order.
std::vector<std::array<VertexId, 3>> delaunay_triangles_bruteforce(const PointList& points);

// Number of points on the convex hull boundary, including collinear ones
// (monotone chain with non-strict turns). Assumes distinct points, n >= 1.
std::size_t hull_point_count(const PointList& points);

// --- descent forest ---------------------------------------------------------
// Parent array computed from scratch: K_i = lower-order graph neighbors,
// parent = the nearest member (ties to the smaller id), roots get -1.
std::vector<VertexId> forest_bruteforce(const NeighborGraph& graph, const PotentialField& field,
                                        const PointList& points, Metric metric);

// Graph-neighborhood local minima of the potential order (the expected roots).
std::vector<VertexId> local_minima(const NeighborGraph& graph, const PotentialField& field);

// --- proximity graphs -------------------------------------------------------
EdgeSet knn_edges_bruteforce(const PointList& points, int k, Metric metric, bool mutual);
EdgeSet mst_edges_fullgraph(const PointList& points, Metric metric);
EdgeSet rng_edges_bruteforce(const PointList& points, Metric metric);

// Canonical tree weight: Euclidean edge lengths summed in sorted-edge order
// with compensated accumulation, so equal edge sets give bitwise-equal sums.
double tree_weight(const PointList& points, const EdgeSet& edges);

// --- potentials --------------------------------------------------------------
// P_i from a 50-digit floating evaluation of the Gaussian sum.
std::vector<double> potentials_highprec(const PointList& points, double sigma, Metric metric,
                                        bool include_self);

// --- helpers -----------------------------------------------------------------
EdgeSet edge_set(const NeighborGraph& graph);

// Uniform random points in [0, 1)^2 from a seeded splitmix64 stream.
PointList random_points(std::uint64_t seed, std::size_t n);

// Partition of [0, n) induced by labels, as a canonical set of sorted groups;
// equal partitions compare equal regardless of label names.
std::set<std::vector<std::size_t>> partition_of(const std::vector<VertexId>& labels);

} // namespace oracles
