#include "dnnclust/intree.hpp"

#include "dnnclust/errors.hpp"
#include "dnnclust/threading.hpp"

#include <algorithm>

namespace dnnclust {

std::size_t InTreeForest::root_count() const {
    return static_cast<std::size_t>(std::count(parent.begin(), parent.end(), kNoVertex));
}

std::vector<VertexId> lower_neighbor_set(VertexId i, const NeighborGraph& graph,
                                         const PotentialField& field) {
    std::vector<VertexId> out;
    for (VertexId k : graph.adj[static_cast<std::size_t>(i)]) {
        if (strictly_lower(field, k, i)) out.push_back(k);
    }
    return out; // adjacency is sorted, filtering preserves that
}

std::optional<VertexId> directed_neighbor(VertexId i, const NeighborGraph& graph,
                                          const PotentialField& field, const PointList& points,
                                          Metric metric) {
    VertexId best = kNoVertex;
    double best_key = 0.0;
    for (VertexId k : graph.adj[static_cast<std::size_t>(i)]) {
        if (!strictly_lower(field, k, i)) continue;
        double key = distance_key(metric, points[static_cast<std::size_t>(i)],
                                  points[static_cast<std::size_t>(k)]);
        // ascending-id scan: strict < keeps the smallest id on exact ties
        if (best == kNoVertex || key < best_key) {
            best = k;
            best_key = key;
        }
    }
    if (best == kNoVertex) return std::nullopt;
    return best;
}

InTreeForest build_forest(const NeighborGraph& graph, const PotentialField& field,
                          const PointList& points, Metric metric, int threads) {
    if (graph.adj.size() != field.size() || field.size() != points.size()) {
        throw InvalidParameter("build_forest: graph, field and points sizes differ");
    }
    InTreeForest forest;
    forest.parent.assign(points.size(), kNoVertex);
    parallel_for(points.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto p = directed_neighbor(static_cast<VertexId>(i), graph, field, points, metric);
            if (p) forest.parent[i] = *p;
        }
    });
    return forest;
}

ClusterLabeling resolve_roots(const InTreeForest& forest) {
    const auto n = forest.size();
    ClusterLabeling out;
    out.root_of.assign(n, kNoVertex);

    std::vector<VertexId> path;
    for (std::size_t i = 0; i < n; ++i) {
        if (out.root_of[i] != kNoVertex) continue;
        path.clear();
        VertexId v = static_cast<VertexId>(i);
        while (true) {
            if (out.root_of[static_cast<std::size_t>(v)] != kNoVertex) {
                break; // joins an already-resolved path
            }
            VertexId p = forest.parent[static_cast<std::size_t>(v)];
            if (p == kNoVertex) {
                out.root_of[static_cast<std::size_t>(v)] = v;
                break;
            }
            path.push_back(v);
            if (path.size() > n) {
                throw InternalError("resolve_roots: cycle detected in parent links");
            }
            v = p;
        }
        VertexId root = out.root_of[static_cast<std::size_t>(v)];
        for (VertexId u : path) out.root_of[static_cast<std::size_t>(u)] = root;
    }

    // dense labels in ascending root id order
    std::vector<VertexId> roots;
    for (std::size_t i = 0; i < n; ++i) {
        if (out.root_of[i] == static_cast<VertexId>(i)) roots.push_back(static_cast<VertexId>(i));
    }
    out.cluster_count = static_cast<VertexId>(roots.size());
    out.label.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = std::lower_bound(roots.begin(), roots.end(), out.root_of[i]);
        out.label[i] = static_cast<VertexId>(it - roots.begin());
    }
    return out;
}

ForestDiagnostics validate_forest(const InTreeForest& forest, const PotentialField& field,
                                  const NeighborGraph* graph) {
    ForestDiagnostics diag;
    const auto n = forest.size();
    if (field.size() != n) {
        diag.violations.push_back("size mismatch between forest and field");
        return diag;
    }

    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
        VertexId p = forest.parent[i];
        if (p == kNoVertex) {
            ++roots;
            continue;
        }
        if (p < 0 || static_cast<std::size_t>(p) >= n) {
            diag.violations.push_back("vertex " + std::to_string(i) + ": parent out of range");
            continue;
        }
        if (static_cast<std::size_t>(p) == i) {
            diag.violations.push_back("vertex " + std::to_string(i) + ": self-parent");
            continue;
        }
        if (!strictly_lower(field, p, static_cast<VertexId>(i))) {
            diag.violations.push_back("vertex " + std::to_string(i) +
                                      ": parent does not have strictly lower order");
        }
    }

    // acyclicity: every chain must terminate within n-1 steps
    for (std::size_t i = 0; i < n; ++i) {
        VertexId v = static_cast<VertexId>(i);
        std::size_t steps = 0;
        while (v != kNoVertex && forest.parent[static_cast<std::size_t>(v)] != kNoVertex) {
            v = forest.parent[static_cast<std::size_t>(v)];
            if (v < 0 || static_cast<std::size_t>(v) >= n) break; // reported above
            if (++steps >= n) {
                diag.violations.push_back("vertex " + std::to_string(i) +
                                          ": parent chain does not terminate (cycle)");
                break;
            }
        }
    }

    if (forest.edge_count() != n - roots) {
        diag.violations.push_back("edge count differs from n - roots");
    }

    if (graph) {
        if (graph->adj.size() != n) {
            diag.violations.push_back("size mismatch between forest and graph");
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (forest.parent[i] != kNoVertex) continue;
                for (VertexId k : graph->adj[i]) {
                    if (strictly_lower(field, k, static_cast<VertexId>(i))) {
                        diag.violations.push_back(
                            "root " + std::to_string(i) +
                            " is not a local minimum of its graph neighborhood");
                        break;
                    }
                }
            }
        }
    }
    return diag;
}

} // namespace dnnclust
