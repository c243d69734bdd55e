#pragma once

#include "dnnclust/metric.hpp"
#include "dnnclust/point.hpp"

#include <vector>

namespace dnnclust {

/// Whether the j == i kernel term (always exactly 1) enters the sum. The
/// default includes it; the term is a constant offset of -1 per point, so it
/// never changes which of two points has the lower potential.
enum class SelfTerm { Include, Exclude };

/// Per-point potential values. With the self-term included every value lies
/// in [-N, -1]: each of the N Gaussian terms is in (0, 1] and the self-term
/// equals 1.
struct PotentialField {
    double sigma = 1.0;               // Gaussian bandwidth (squared-distance units)
    std::vector<double> values;       // P_i, negative

    std::size_t size() const { return values.size(); }
};

/// Potential of every point: P_i = -sum_j exp(-d(i,j)^2 / sigma).
///
/// The inner sum runs in ascending j with compensated (Neumaier)
/// accumulation, so the result is deterministic and independent of the
/// worker count: the outer loop over i may be split across threads, each P_i
/// being independent.
///
/// Throws InvalidParameter when sigma <= 0 or points is empty.
PotentialField compute_potentials(const PointList& points, double sigma, Metric metric,
                                  SelfTerm self_term = SelfTerm::Include, int threads = 0);

/// Strict total order on points: k before i iff P_k < P_i, with exact
/// potential ties broken by the smaller vertex id. Irreflexive, antisymmetric,
/// transitive, and total, which is what makes the descent construction
/// cycle-free even on tied potentials.
inline bool strictly_lower(const PotentialField& field, VertexId k, VertexId i) {
    double pk = field.values[static_cast<std::size_t>(k)];
    double pi = field.values[static_cast<std::size_t>(i)];
    return pk < pi || (pk == pi && k < i);
}

} // namespace dnnclust
