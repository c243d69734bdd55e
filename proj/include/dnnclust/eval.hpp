#pragma once

#include "dnnclust/geometry.hpp"
#include "dnnclust/intree.hpp"
#include "dnnclust/metric.hpp"
#include "dnnclust/point.hpp"
#include "dnnclust/potential.hpp"
#include "dnnclust/proxgraphs.hpp"

#include <optional>
#include <vector>

namespace dnnclust {

/// Everything one clustering run produces. Graph, field, forest and labeling
/// live on the deduplicated point set; `labels` broadcasts the cluster
/// assignment back to the original indexing through `dedup`.
struct ClusterResult {
    GraphKind kind;
    double sigma = 1.0;
    Metric metric = Metric::Euclidean;

    PointList points;        // original input order
    DedupMap dedup;          // original -> unique
    NeighborGraph graph;     // over unique points
    PotentialField field;    // over unique points
    InTreeForest forest;     // over unique points
    ClusterLabeling labeling;// over unique points
    std::vector<VertexId> labels; // per original point

    VertexId cluster_count() const { return labeling.cluster_count; }
};

/// One row of a sigma sweep. ari/nmi are present only when ground-truth
/// labels were supplied.
struct SweepRow {
    double sigma = 0.0;
    VertexId cluster_count = 0;
    std::optional<double> ari;
    std::optional<double> nmi;
};

/// The full clustering pipeline: dedupe, build the proximity graph, compute
/// potentials, descend to the nearest lower-order neighbor, resolve roots,
/// broadcast labels back through the dedup map.
///
/// When the Delaunay graph is requested but the (deduplicated) input is
/// degenerate — fewer than three distinct points or all collinear — the
/// pipeline falls back to the minimum spanning tree, which for such inputs is
/// the chain of points along their common line.
ClusterResult cluster_pipeline(const PointList& points, double sigma, const GraphKind& kind,
                               Metric metric = Metric::Euclidean, int threads = 0,
                               SelfTerm self_term = SelfTerm::Include,
                               KnnSymmetrization sym = KnnSymmetrization::Union);

/// Adjusted Rand index via the pair-counting contingency formula. 1 for
/// identical partitions, expected 0 for independent random labelings, and 1
/// by convention when the correction denominator vanishes (both partitions
/// trivial). Throws InvalidParameter on length mismatch or empty input.
double adjusted_rand_index(const std::vector<VertexId>& a, const std::vector<VertexId>& b);

/// Mutual information normalized by the arithmetic mean of the entropies
/// (natural log). Identical partitions give exactly 1 (including the
/// both-single-cluster case, by convention); independent labelings approach 0.
double normalized_mutual_information(const std::vector<VertexId>& a,
                                     const std::vector<VertexId>& b);

/// Run the pipeline once per sigma, in the given order (duplicates allowed),
/// scoring against `truth` when provided.
std::vector<SweepRow> sweep_sigma(const PointList& points, const std::vector<double>& sigmas,
                                  const GraphKind& kind, Metric metric = Metric::Euclidean,
                                  const std::vector<VertexId>* truth = nullptr,
                                  int threads = 0);

} // namespace dnnclust
