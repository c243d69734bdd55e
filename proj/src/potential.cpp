#include "dnnclust/potential.hpp"

#include "dnnclust/errors.hpp"
#include "dnnclust/threading.hpp"

#include <cmath>

namespace dnnclust {
namespace {

// Neumaier compensated accumulator: the running error of the plain sum is
// carried separately, so the result is within one rounding of the exact sum
// regardless of term count.
struct CompensatedSum {
    double s = 0.0;
    double c = 0.0;

    void add(double term) {
        double t = s + term;
        if (std::fabs(s) >= std::fabs(term)) {
            c += (s - t) + term;
        } else {
            c += (term - t) + s;
        }
        s = t;
    }

    double value() const { return s + c; }
};

} // namespace

PotentialField compute_potentials(const PointList& points, double sigma, Metric metric,
                                  SelfTerm self_term, int threads) {
    if (points.empty()) throw InvalidParameter("compute_potentials: empty point set");
    if (!(sigma > 0.0)) {
        throw InvalidParameter("compute_potentials: sigma must be > 0");
    }

    PotentialField field;
    field.sigma = sigma;
    field.values.resize(points.size());

    const std::size_t n = points.size();
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            CompensatedSum sum;
            for (std::size_t j = 0; j < n; ++j) {
                if (self_term == SelfTerm::Exclude && j == i) continue;
                double d2 = distance_squared(metric, points[i], points[j]);
                sum.add(std::exp(-d2 / sigma));
            }
            field.values[i] = -sum.value();
        }
    });
    return field;
}

} // namespace dnnclust
