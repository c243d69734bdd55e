#pragma once

#include "dnnclust/point.hpp"

namespace dnnclust {

enum class Orientation : int {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = 1,
};

enum class CirclePosition : int {
    Outside = -1,
    Cocircular = 0,
    Inside = 1,
};

/// Exact sign of the orientation determinant of the triangle (a, b, c).
///
/// The result is the true sign of (b-a) x (c-a) evaluated in real arithmetic,
/// for any finite double inputs, including ones where the straightforward
/// floating-point expression would round to zero, underflow, or overflow.
/// A fast floating-point filter resolves the common case; near-degenerate
/// inputs fall through to exact expansion arithmetic.
Orientation orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Exact position of d relative to the circle through a, b, c.
///
/// Requires orient2d(a, b, c) == CounterClockwise; throws InvalidParameter
/// otherwise (a caller bug, not a data error).
CirclePosition in_circumcircle(const Point2& a, const Point2& b, const Point2& c,
                               const Point2& d);

namespace detail {

/// Raw sign (-1/0/+1) of the orientation determinant. No precondition.
int orient2d_sign(const Point2& a, const Point2& b, const Point2& c);

/// Raw sign of the 4x4 lifted determinant. Positive means "d inside the
/// circumcircle" when (a, b, c) is counter-clockwise; the sign flips for a
/// clockwise triple. No precondition check.
int incircle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Incircle sign under symbolic perturbation, never zero.
///
/// Cocircular ties are resolved as if every point i were lifted onto the
/// paraboloid at height x^2 + y^2 - w_i with infinitesimal weights
/// w_0 >> w_1 >> ... > 0 ordered by vertex id. Equivalent to the regular
/// triangulation of the perturbed lift, so any consistent use yields a
/// deterministic triangulation independent of insertion order.
/// Requires the four points to be pairwise distinct.
int incircle_perturbed(const Point2& a, VertexId ia, const Point2& b, VertexId ib,
                       const Point2& c, VertexId ic, const Point2& d, VertexId id);

} // namespace detail

} // namespace dnnclust
