#pragma once

#include "dnnclust/geometry.hpp"
#include "dnnclust/metric.hpp"
#include "dnnclust/point.hpp"
#include "dnnclust/potential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dnnclust {

/// Directed forest in which every non-root vertex points at its chosen
/// lower-potential neighbor. parent[i] == kNoVertex marks a root.
///
/// Invariants: no self-parent; parent chains are acyclic and reach a root in
/// at most n-1 steps; strictly_lower(field, parent[i], i) for every non-root;
/// edge count equals n minus the number of roots.
struct InTreeForest {
    std::vector<VertexId> parent;

    std::size_t size() const { return parent.size(); }
    std::size_t root_count() const;
    std::size_t edge_count() const { return size() - root_count(); }
    bool is_root(VertexId i) const { return parent[static_cast<std::size_t>(i)] == kNoVertex; }
};

/// Per-vertex root and dense cluster label; label(i) == label(j) iff both
/// vertices reach the same root. Labels are assigned in ascending root id
/// order, label 0 being the smallest root id.
struct ClusterLabeling {
    std::vector<VertexId> root_of;
    std::vector<VertexId> label;
    VertexId cluster_count = 0;
};

/// Validation report; empty `violations` means all forest invariants hold.
struct ForestDiagnostics {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Graph neighbors of i that come strictly before i in the potential order
/// (lower potential, ties to the smaller id). Sorted ascending.
std::vector<VertexId> lower_neighbor_set(VertexId i, const NeighborGraph& graph,
                                         const PotentialField& field);

/// The directed neighbor of i: the nearest member of lower_neighbor_set(i),
/// distance ties broken by the smaller vertex id. Empty when i has no lower
/// neighbor, which makes i a root.
std::optional<VertexId> directed_neighbor(VertexId i, const NeighborGraph& graph,
                                          const PotentialField& field, const PointList& points,
                                          Metric metric);

/// Apply directed_neighbor to every vertex. Descent along a strict total
/// order guarantees the result is a forest (no cycles).
InTreeForest build_forest(const NeighborGraph& graph, const PotentialField& field,
                          const PointList& points, Metric metric, int threads = 0);

/// Follow parent links to a root for every vertex (memoized, so each vertex
/// is visited O(1) amortized) and assign dense cluster labels. Throws
/// InternalError if a cycle is detected — that would mean a broken forest,
/// not a user error.
ClusterLabeling resolve_roots(const InTreeForest& forest);

/// Check the forest invariants and report each violation. When `graph` is
/// given, additionally checks that every root is a local minimum of the
/// potential order within its graph neighborhood.
ForestDiagnostics validate_forest(const InTreeForest& forest, const PotentialField& field,
                                  const NeighborGraph* graph = nullptr);

} // namespace dnnclust
