#include "dnnclust/eval.hpp"

#include "dnnclust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace dnnclust {
namespace {

// Dense relabeling in first-occurrence order; two label vectors describe the
// same partition iff their canonical forms are equal.
std::vector<VertexId> canonical_labels(const std::vector<VertexId>& labels,
                                       VertexId* num_classes = nullptr) {
    std::vector<VertexId> out(labels.size());
    std::unordered_map<VertexId, VertexId> dense;
    dense.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = dense.emplace(labels[i], static_cast<VertexId>(dense.size())).first;
        out[i] = it->second;
    }
    if (num_classes) *num_classes = static_cast<VertexId>(dense.size());
    return out;
}

struct Contingency {
    VertexId ka = 0, kb = 0;
    std::vector<std::int64_t> cells; // ka x kb
    std::vector<std::int64_t> row_sums, col_sums;
    std::int64_t n = 0;

    Contingency(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
        if (a.size() != b.size()) {
            throw InvalidParameter("cluster indexes: label vectors differ in length");
        }
        if (a.empty()) throw InvalidParameter("cluster indexes: empty label vectors");
        auto ca = canonical_labels(a, &ka);
        auto cb = canonical_labels(b, &kb);
        cells.assign(static_cast<std::size_t>(ka) * static_cast<std::size_t>(kb), 0);
        row_sums.assign(static_cast<std::size_t>(ka), 0);
        col_sums.assign(static_cast<std::size_t>(kb), 0);
        n = static_cast<std::int64_t>(a.size());
        for (std::size_t t = 0; t < a.size(); ++t) {
            ++cells[static_cast<std::size_t>(ca[t]) * static_cast<std::size_t>(kb) +
                    static_cast<std::size_t>(cb[t])];
            ++row_sums[static_cast<std::size_t>(ca[t])];
            ++col_sums[static_cast<std::size_t>(cb[t])];
        }
    }
};

double comb2(std::int64_t x) {
    return x < 2 ? 0.0 : 0.5 * static_cast<double>(x) * static_cast<double>(x - 1);
}

} // namespace

ClusterResult cluster_pipeline(const PointList& points, double sigma, const GraphKind& kind,
                               Metric metric, int threads, SelfTerm self_term,
                               KnnSymmetrization sym) {
    ClusterResult r;
    r.kind = kind;
    r.sigma = sigma;
    r.metric = metric;
    r.points = points;
    r.dedup = dedupe_points(points);

    const PointList& uniq = r.dedup.unique_points;
    if (kind.type == GraphKind::Type::Delaunay) {
        try {
            r.graph = adjacency(build_delaunay(uniq));
        } catch (const DegenerateInput&) {
            // too few / collinear points: the spanning tree is the chain of
            // points along their common line
            r.graph = emst_graph(uniq, metric);
        }
    } else {
        r.graph = build_graph(kind, uniq, metric, sym);
    }

    r.field = compute_potentials(uniq, sigma, metric, self_term, threads);
    r.forest = build_forest(r.graph, r.field, uniq, metric, threads);
    r.labeling = resolve_roots(r.forest);

    r.labels.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        r.labels[i] = r.labeling.label[static_cast<std::size_t>(r.dedup.remap[i])];
    }
    return r;
}

double adjusted_rand_index(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    Contingency c(a, b);

    double index = 0.0;
    for (std::int64_t cell : c.cells) index += comb2(cell);
    double sum_a = 0.0, sum_b = 0.0;
    for (std::int64_t s : c.row_sums) sum_a += comb2(s);
    for (std::int64_t s : c.col_sums) sum_b += comb2(s);

    double pairs = comb2(c.n);
    if (pairs == 0.0) return 1.0; // single point: all partitions agree
    double expected = sum_a * sum_b / pairs;
    double max_index = 0.5 * (sum_a + sum_b);
    double den = max_index - expected;
    if (den == 0.0) return 1.0; // both partitions trivial (all-same or all-singletons)
    return (index - expected) / den;
}

double normalized_mutual_information(const std::vector<VertexId>& a,
                                     const std::vector<VertexId>& b) {
    Contingency c(a, b);

    // identical partitions score exactly 1, including the zero-entropy case
    {
        auto ca = canonical_labels(a);
        auto cb = canonical_labels(b);
        if (ca == cb) return 1.0;
    }

    const double n = static_cast<double>(c.n);
    double h_a = 0.0, h_b = 0.0, mi = 0.0;
    for (std::int64_t s : c.row_sums) {
        if (s > 0) h_a -= (static_cast<double>(s) / n) * std::log(static_cast<double>(s) / n);
    }
    for (std::int64_t s : c.col_sums) {
        if (s > 0) h_b -= (static_cast<double>(s) / n) * std::log(static_cast<double>(s) / n);
    }
    for (VertexId i = 0; i < c.ka; ++i) {
        for (VertexId j = 0; j < c.kb; ++j) {
            std::int64_t cell = c.cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(c.kb) +
                                        static_cast<std::size_t>(j)];
            if (cell == 0) continue;
            double pij = static_cast<double>(cell) / n;
            double ratio = n * static_cast<double>(cell) /
                           (static_cast<double>(c.row_sums[static_cast<std::size_t>(i)]) *
                            static_cast<double>(c.col_sums[static_cast<std::size_t>(j)]));
            mi += pij * std::log(ratio);
        }
    }
    double h_mean = 0.5 * (h_a + h_b);
    if (h_mean <= 0.0) return 0.0; // one side trivial, partitions not identical
    double nmi = mi / h_mean;
    return std::clamp(nmi, 0.0, 1.0);
}

std::vector<SweepRow> sweep_sigma(const PointList& points, const std::vector<double>& sigmas,
                                  const GraphKind& kind, Metric metric,
                                  const std::vector<VertexId>* truth, int threads) {
    if (sigmas.empty()) throw InvalidParameter("sweep_sigma: empty sigma list");
    if (truth && truth->size() != points.size()) {
        throw InvalidParameter("sweep_sigma: truth labels differ in length from points");
    }
    std::vector<SweepRow> rows;
    rows.reserve(sigmas.size());
    for (double sigma : sigmas) {
        ClusterResult res = cluster_pipeline(points, sigma, kind, metric, threads);
        SweepRow row;
        row.sigma = sigma;
        row.cluster_count = res.cluster_count();
        if (truth) {
            row.ari = adjusted_rand_index(*truth, res.labels);
            row.nmi = normalized_mutual_information(*truth, res.labels);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace dnnclust
