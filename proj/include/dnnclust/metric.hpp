#pragma once

#include "dnnclust/point.hpp"

#include <cmath>

namespace dnnclust {

/// Distance metric between data points. SquaredEuclidean exists for internal
/// use (monotone surrogate); Euclidean and Manhattan are the user-facing
/// choices.
enum class Metric {
    Euclidean,
    SquaredEuclidean,
    Manhattan,
};

/// Metric distance d(p, q). Nonnegative, symmetric, zero iff p == q.
inline double distance(Metric m, const Point2& p, const Point2& q) {
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    switch (m) {
        case Metric::Euclidean: return std::sqrt(dx * dx + dy * dy);
        case Metric::SquaredEuclidean: return dx * dx + dy * dy;
        case Metric::Manhattan: return std::fabs(dx) + std::fabs(dy);
    }
    return 0.0;
}

/// Monotone comparison key: distance_key(m,p,q) < distance_key(m,p,r) iff
/// d(p,q) < d(p,r). For Euclidean this is the squared distance, computed
/// directly from the coordinates so nearest-neighbor ties are decided on one
/// well-defined double value.
inline double distance_key(Metric m, const Point2& p, const Point2& q) {
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    switch (m) {
        case Metric::Euclidean:
        case Metric::SquaredEuclidean: return dx * dx + dy * dy;
        case Metric::Manhattan: return std::fabs(dx) + std::fabs(dy);
    }
    return 0.0;
}

/// d(p, q)^2 as used by the Gaussian kernel. For Euclidean the square is
/// computed directly (dx*dx + dy*dy), not via sqrt-then-square.
inline double distance_squared(Metric m, const Point2& p, const Point2& q) {
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    switch (m) {
        case Metric::Euclidean: return dx * dx + dy * dy;
        case Metric::SquaredEuclidean: {
            double d = dx * dx + dy * dy;
            return d * d;
        }
        case Metric::Manhattan: {
            double d = std::fabs(dx) + std::fabs(dy);
            return d * d;
        }
    }
    return 0.0;
}

} // namespace dnnclust
