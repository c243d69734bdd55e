#include "dnnclust/proxgraphs.hpp"

#include "dnnclust/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace dnnclust {
namespace {

struct WeightedEdge {
    double key; // metric comparison key
    VertexId i, j;

    bool operator<(const WeightedEdge& o) const {
        if (key != o.key) return key < o.key;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

struct UnionFind {
    std::vector<VertexId> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    VertexId find(VertexId x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

NeighborGraph graph_from_edges(std::size_t n,
                               const std::vector<std::pair<VertexId, VertexId>>& edges) {
    NeighborGraph g;
    g.n = static_cast<VertexId>(n);
    g.adj.resize(n);
    for (auto [i, j] : edges) {
        g.adj[static_cast<std::size_t>(i)].push_back(j);
        g.adj[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

std::vector<WeightedEdge> all_pair_edges(const PointList& points, Metric metric) {
    std::vector<WeightedEdge> edges;
    const auto n = static_cast<VertexId>(points.size());
    edges.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2);
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            edges.push_back({distance_key(metric, points[static_cast<std::size_t>(i)],
                                          points[static_cast<std::size_t>(j)]),
                             i, j});
        }
    }
    return edges;
}

// Delaunay edges when the input admits a triangulation; empty optional when
// it is degenerate (or still contains duplicates) and the caller must fall
// back to the dense route.
std::optional<std::vector<std::pair<VertexId, VertexId>>> try_delaunay_edges(
    const PointList& points) {
    try {
        return adjacency(build_delaunay(points)).edges();
    } catch (const DegenerateInput&) {
        return std::nullopt;
    } catch (const InvalidParameter&) {
        return std::nullopt;
    }
}

NeighborGraph kruskal(std::size_t n, std::vector<WeightedEdge> edges) {
    std::sort(edges.begin(), edges.end());
    UnionFind uf(n);
    std::vector<std::pair<VertexId, VertexId>> tree;
    tree.reserve(n - 1);
    for (const auto& e : edges) {
        if (uf.unite(e.i, e.j)) {
            tree.emplace_back(e.i, e.j);
            if (tree.size() == n - 1) break;
        }
    }
    if (tree.size() != n - 1) {
        throw InternalError("emst_graph: edge set did not span all vertices");
    }
    return graph_from_edges(n, tree);
}

bool lune_is_empty(const PointList& points, Metric metric, VertexId i, VertexId j) {
    const auto n = static_cast<VertexId>(points.size());
    double dij = distance_key(metric, points[static_cast<std::size_t>(i)],
                              points[static_cast<std::size_t>(j)]);
    for (VertexId w = 0; w < n; ++w) {
        if (w == i || w == j) continue;
        double diw = distance_key(metric, points[static_cast<std::size_t>(i)],
                                  points[static_cast<std::size_t>(w)]);
        if (diw >= dij) continue;
        double djw = distance_key(metric, points[static_cast<std::size_t>(j)],
                                  points[static_cast<std::size_t>(w)]);
        if (djw < dij) return false; // w strictly inside the open lune
    }
    return true;
}

} // namespace

std::string GraphKind::name() const {
    switch (type) {
        case Type::Delaunay: return "delaunay";
        case Type::Knn: return "knn(" + std::to_string(k) + ")";
        case Type::Mst: return "mst";
        case Type::Rng: return "rng";
    }
    return "?";
}

NeighborGraph knn_graph(const PointList& points, int k, Metric metric,
                        KnnSymmetrization sym) {
    const auto n = static_cast<VertexId>(points.size());
    if (k < 1) throw InvalidParameter("knn_graph: k must be >= 1");
    if (k >= n) {
        throw InvalidParameter("knn_graph: k must be < n (k=" + std::to_string(k) +
                               ", n=" + std::to_string(n) + ")");
    }

    // directed relation: selects[i] = the k nearest of i, ties to smaller id
    std::vector<std::vector<VertexId>> selects(static_cast<std::size_t>(n));
    std::vector<std::pair<double, VertexId>> cand;
    for (VertexId i = 0; i < n; ++i) {
        cand.clear();
        for (VertexId j = 0; j < n; ++j) {
            if (j == i) continue;
            cand.emplace_back(distance_key(metric, points[static_cast<std::size_t>(i)],
                                           points[static_cast<std::size_t>(j)]),
                              j);
        }
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
        auto& sel = selects[static_cast<std::size_t>(i)];
        sel.reserve(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) sel.push_back(cand[static_cast<std::size_t>(t)].second);
        std::sort(sel.begin(), sel.end());
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j : selects[static_cast<std::size_t>(i)]) {
            if (sym == KnnSymmetrization::Union) {
                edges.emplace_back(std::min(i, j), std::max(i, j));
            } else if (i < j) {
                const auto& back = selects[static_cast<std::size_t>(j)];
                if (std::binary_search(back.begin(), back.end(), i)) edges.emplace_back(i, j);
            }
        }
    }
    return graph_from_edges(static_cast<std::size_t>(n), edges);
}

NeighborGraph emst_graph(const PointList& points, Metric metric) {
    const std::size_t n = points.size();
    if (n == 0) throw InvalidParameter("emst_graph: empty point set");
    if (n == 1) {
        NeighborGraph g;
        g.n = 1;
        g.adj.resize(1);
        return g;
    }

    if (metric == Metric::Euclidean) {
        if (auto dedges = try_delaunay_edges(points)) {
            std::vector<WeightedEdge> edges;
            edges.reserve(dedges->size());
            for (auto [i, j] : *dedges) {
                edges.push_back({distance_key(metric, points[static_cast<std::size_t>(i)],
                                              points[static_cast<std::size_t>(j)]),
                                 i, j});
            }
            return kruskal(n, std::move(edges));
        }
    }
    return kruskal(n, all_pair_edges(points, metric));
}

NeighborGraph rng_graph(const PointList& points, Metric metric) {
    const std::size_t n = points.size();
    if (n < 2) throw InvalidParameter("rng_graph: need at least 2 points");

    std::vector<std::pair<VertexId, VertexId>> candidates;
    if (metric == Metric::Euclidean) {
        if (auto dedges = try_delaunay_edges(points)) candidates = std::move(*dedges);
    }
    if (candidates.empty()) {
        for (VertexId i = 0; i < static_cast<VertexId>(n); ++i) {
            for (VertexId j = i + 1; j < static_cast<VertexId>(n); ++j) {
                candidates.emplace_back(i, j);
            }
        }
    }

    std::vector<std::pair<VertexId, VertexId>> kept;
    for (auto [i, j] : candidates) {
        if (lune_is_empty(points, metric, i, j)) kept.emplace_back(i, j);
    }
    return graph_from_edges(n, kept);
}

NeighborGraph build_graph(const GraphKind& kind, const PointList& points, Metric metric,
                          KnnSymmetrization sym) {
    switch (kind.type) {
        case GraphKind::Type::Delaunay: return adjacency(build_delaunay(points));
        case GraphKind::Type::Knn: return knn_graph(points, kind.k, metric, sym);
        case GraphKind::Type::Mst: return emst_graph(points, metric);
        case GraphKind::Type::Rng: return rng_graph(points, metric);
    }
    throw InvalidParameter("build_graph: unknown graph kind");
}

} // namespace dnnclust
