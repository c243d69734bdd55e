// Exact geometric predicates: a floating-point filter backed by adaptive
// expansion arithmetic (Shewchuk-style error-free transformations), with an
// arbitrary-precision rational fallback for inputs whose magnitudes span so
// many binades that even the expansion tails would leave the subnormal range.
//
// This file must be compiled without floating-point contraction; the error
// bounds and the error-free transformations assume one rounding per operation
// (std::fma is used deliberately where a fused multiply-add is wanted).

#include "dnnclust/predicates.hpp"

#include "dnnclust/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace dnnclust {
namespace {

constexpr double kEpsilon = 0x1p-53; // half ulp of 1.0
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIccErrBoundA = (10.0 + 96.0 * kEpsilon) * kEpsilon;

// Absolute slack added to the relative filter bounds. Any absolute error a
// double expression can pick up from subnormal rounding is below 1e-320; the
// guard is vastly larger than that and still far below anything a non-exotic
// input produces, so it only reroutes extreme cases to the exact path.
constexpr double kUnderflowGuard = 1e-290;

inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// ---------------------------------------------------------------------------
// Error-free transformations
// ---------------------------------------------------------------------------

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bvirt = x - a;
    double avirt = x - bvirt;
    double bround = b - bvirt;
    double around = a - avirt;
    y = around + bround;
}

inline void fast_two_sum(double a, double b, double& x, double& y) {
    // requires |a| >= |b|
    x = a + b;
    double bvirt = x - a;
    y = b - bvirt;
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    double bvirt = a - x;
    double avirt = x + bvirt;
    double bround = bvirt - b;
    double around = a - avirt;
    y = around + bround;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

// (a1, a0) - b -> (x2, x1, x0)
inline void two_one_diff(double a1, double a0, double b, double& x2, double& x1, double& x0) {
    double i;
    two_diff(a0, b, i, x0);
    two_sum(a1, i, x2, x1);
}

inline void two_one_sum(double a1, double a0, double b, double& x2, double& x1, double& x0) {
    double i;
    two_sum(a0, b, i, x0);
    two_sum(a1, i, x2, x1);
}

// (a1, a0) - (b1, b0) -> 4-component expansion, increasing magnitude
inline void two_two_diff(double a1, double a0, double b1, double b0, double* x) {
    double j, r0;
    two_one_diff(a1, a0, b0, j, r0, x[0]);
    two_one_diff(j, r0, b1, x[3], x[2], x[1]);
}

inline void two_two_sum(double a1, double a0, double b1, double b0, double* x) {
    double j, r0;
    two_one_sum(a1, a0, b0, j, r0, x[0]);
    two_one_sum(j, r0, b1, x[3], x[2], x[1]);
}

// ---------------------------------------------------------------------------
// Expansion arithmetic (components in increasing magnitude, nonoverlapping)
// ---------------------------------------------------------------------------

// True when |a| <= |b|, matching Shewchuk's merge order test.
inline bool mag_le(double a, double b) { return (b > a) == (b > -a); }

int fast_expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f,
                                double* h) {
    int ei = 0, fi = 0, hn = 0;
    double q, qnew, hh;

    if (mag_le(e[0], f[0])) {
        q = e[ei++];
    } else {
        q = f[fi++];
    }
    if (ei < elen && fi < flen) {
        if (mag_le(e[ei], f[fi])) {
            fast_two_sum(e[ei++], q, qnew, hh);
        } else {
            fast_two_sum(f[fi++], q, qnew, hh);
        }
        q = qnew;
        if (hh != 0.0) h[hn++] = hh;
        while (ei < elen && fi < flen) {
            if (mag_le(e[ei], f[fi])) {
                two_sum(q, e[ei++], qnew, hh);
            } else {
                two_sum(q, f[fi++], qnew, hh);
            }
            q = qnew;
            if (hh != 0.0) h[hn++] = hh;
        }
    }
    while (ei < elen) {
        two_sum(q, e[ei++], qnew, hh);
        q = qnew;
        if (hh != 0.0) h[hn++] = hh;
    }
    while (fi < flen) {
        two_sum(q, f[fi++], qnew, hh);
        q = qnew;
        if (hh != 0.0) h[hn++] = hh;
    }
    if (q != 0.0 || hn == 0) h[hn++] = q;
    return hn;
}

int scale_expansion_zeroelim(int elen, const double* e, double b, double* h) {
    int hn = 0;
    double q, hh;
    two_product(e[0], b, q, hh);
    if (hh != 0.0) h[hn++] = hh;
    for (int i = 1; i < elen; ++i) {
        double p1, p0, sum;
        two_product(e[i], b, p1, p0);
        two_sum(q, p0, sum, hh);
        if (hh != 0.0) h[hn++] = hh;
        fast_two_sum(p1, sum, q, hh);
        if (hh != 0.0) h[hn++] = hh;
    }
    if (q != 0.0 || hn == 0) h[hn++] = q;
    return hn;
}

inline int expansion_sign(const double* e, int n) { return sign_of(e[n - 1]); }

// px*qy - py*qx as a 4-component expansion.
inline void cross_expansion(const Point2& p, const Point2& q, double* out4) {
    double a1, a0, b1, b0;
    two_product(p.x, q.y, a1, a0);
    two_product(p.y, q.x, b1, b0);
    two_two_diff(a1, a0, b1, b0, out4);
}

// ---------------------------------------------------------------------------
// Scaling gate: the expansion path is exact as long as no intermediate
// product underflows. Inputs are rescaled by a power of two so the largest
// magnitude lands in [1, 2); if some nonzero coordinate would then sit below
// the per-predicate threshold, the rational path takes over.
// ---------------------------------------------------------------------------

struct ScaledInput {
    std::array<double, 8> c{}; // ax ay bx by cx cy dx dy (scaled)
    bool expansions_safe = true;
};

ScaledInput scale_coords(const double* coords, int n, double min_exponent) {
    ScaledInput out;
    double maxabs = 0.0;
    double minabs = 0.0; // smallest nonzero magnitude
    for (int i = 0; i < n; ++i) {
        double a = std::fabs(coords[i]);
        maxabs = std::max(maxabs, a);
        if (a > 0.0 && (minabs == 0.0 || a < minabs)) minabs = a;
    }
    if (maxabs == 0.0) {
        out.expansions_safe = true; // all zero: every product is exactly zero
        return out;
    }
    int ex = std::ilogb(maxabs);
    double scale = std::ldexp(1.0, -ex); // maxabs * scale in [1, 2)
    for (int i = 0; i < n; ++i) out.c[size_t(i)] = coords[i] * scale;
    if (minabs > 0.0 && std::ldexp(minabs, -ex) < min_exponent) {
        out.expansions_safe = false; // magnitude span too wide; scaling would round
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational fallback (exact for every finite double, any magnitude span)
// ---------------------------------------------------------------------------

using Rational = boost::multiprecision::cpp_rational;

Rational to_rational(double d) {
    if (d == 0.0) return Rational(0);
    int ex;
    double m = std::frexp(d, &ex); // d = m * 2^ex, 0.5 <= |m| < 1
    auto mi = static_cast<long long>(std::ldexp(m, 53));
    boost::multiprecision::cpp_int num = mi;
    int e2 = ex - 53;
    if (e2 >= 0) return Rational(num << e2);
    return Rational(num, boost::multiprecision::cpp_int(1) << -e2);
}

int orient2d_rational(const Point2& a, const Point2& b, const Point2& c) {
    Rational ax = to_rational(a.x), ay = to_rational(a.y);
    Rational bx = to_rational(b.x), by = to_rational(b.y);
    Rational cx = to_rational(c.x), cy = to_rational(c.y);
    Rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return det.sign();
}

int incircle_rational(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    Rational ax = to_rational(a.x) - to_rational(d.x);
    Rational ay = to_rational(a.y) - to_rational(d.y);
    Rational bx = to_rational(b.x) - to_rational(d.x);
    Rational by = to_rational(b.y) - to_rational(d.y);
    Rational cx = to_rational(c.x) - to_rational(d.x);
    Rational cy = to_rational(c.y) - to_rational(d.y);
    Rational det = (ax * ax + ay * ay) * (bx * cy - cx * by) +
                   (bx * bx + by * by) * (cx * ay - ax * cy) +
                   (cx * cx + cy * cy) * (ax * by - bx * ay);
    return det.sign();
}

// ---------------------------------------------------------------------------
// Exact expansion evaluations
// ---------------------------------------------------------------------------

int orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
    const double coords[6] = {a.x, a.y, b.x, b.y, c.x, c.y};
    ScaledInput s = scale_coords(coords, 6, 0x1p-400);
    if (!s.expansions_safe) return orient2d_rational(a, b, c);

    Point2 sa{s.c[0], s.c[1]}, sb{s.c[2], s.c[3]}, sc{s.c[4], s.c[5]};
    // det = (ax by - ay bx) + (ay cx - ax cy) + (bx cy - by cx)
    double m1[4], m2[4], m3[4];
    cross_expansion(sa, sb, m1);
    cross_expansion({sa.y, sa.x}, {sc.y, sc.x}, m2); // ay*cx - ax*cy
    cross_expansion(sb, sc, m3);
    double t[8], det[12];
    int tn = fast_expansion_sum_zeroelim(4, m1, 4, m2, t);
    int dn = fast_expansion_sum_zeroelim(tn, t, 4, m3, det);
    return expansion_sign(det, dn);
}

// lift(p) = px^2 + py^2 as a 4-component expansion
inline void lift_expansion(const Point2& p, double* out4) {
    double x1, x0, y1, y0;
    two_product(p.x, p.x, x1, x0);
    two_product(p.y, p.y, y1, y0);
    two_two_sum(x1, x0, y1, y0, out4);
}

// Orientation determinant of (p, q, r) as an expansion (up to 12 components).
int orient_expansion(const Point2& p, const Point2& q, const Point2& r, double* out12) {
    double m1[4], m2[4], m3[4], t[8];
    cross_expansion(p, q, m1);
    cross_expansion(q, r, m2);
    cross_expansion(r, p, m3);
    int tn = fast_expansion_sum_zeroelim(4, m1, 4, m2, t);
    return fast_expansion_sum_zeroelim(tn, t, 4, m3, out12);
}

// e * f where e has up to 12 and f up to 4 components; out holds up to 96.
int expansion_mul_12x4(const double* e, int en, const double* f, int fn, double* out96) {
    double part[4][24];
    int pn[4];
    for (int i = 0; i < fn; ++i) pn[i] = scale_expansion_zeroelim(en, e, f[i], part[i]);
    double t1[48], t2[72];
    if (fn == 1) {
        std::copy(part[0], part[0] + pn[0], out96);
        return pn[0];
    }
    int n = fast_expansion_sum_zeroelim(pn[0], part[0], pn[1], part[1], t1);
    if (fn == 2) {
        std::copy(t1, t1 + n, out96);
        return n;
    }
    n = fast_expansion_sum_zeroelim(n, t1, pn[2], part[2], t2);
    if (fn == 3) {
        std::copy(t2, t2 + n, out96);
        return n;
    }
    return fast_expansion_sum_zeroelim(n, t2, pn[3], part[3], out96);
}

int incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const double coords[8] = {a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y};
    ScaledInput s = scale_coords(coords, 8, 0x1p-200);
    if (!s.expansions_safe) return incircle_rational(a, b, c, d);

    Point2 sa{s.c[0], s.c[1]}, sb{s.c[2], s.c[3]}, sc{s.c[4], s.c[5]}, sd{s.c[6], s.c[7]};

    // D = la*[bcd] - lb*[acd] + lc*[abd] - ld*[abc], positive = inside for CCW abc
    double lift[4][4];
    lift_expansion(sa, lift[0]);
    lift_expansion(sb, lift[1]);
    lift_expansion(sc, lift[2]);
    lift_expansion(sd, lift[3]);

    double ori[4][12];
    int on[4];
    on[0] = orient_expansion(sb, sc, sd, ori[0]);
    on[1] = orient_expansion(sa, sc, sd, ori[1]);
    on[2] = orient_expansion(sa, sb, sd, ori[2]);
    on[3] = orient_expansion(sa, sb, sc, ori[3]);

    double term[4][96];
    int tn[4];
    for (int i = 0; i < 4; ++i) {
        tn[i] = expansion_mul_12x4(ori[i], on[i], lift[i], 4, term[i]);
        if (i == 1 || i == 3) {
            for (int j = 0; j < tn[i]; ++j) term[i][j] = -term[i][j];
        }
    }

    double s1[192], s2[288], det[384];
    int n = fast_expansion_sum_zeroelim(tn[0], term[0], tn[1], term[1], s1);
    n = fast_expansion_sum_zeroelim(n, s1, tn[2], term[2], s2);
    n = fast_expansion_sum_zeroelim(n, s2, tn[3], term[3], det);
    return expansion_sign(det, n);
}

} // namespace

namespace detail {

int orient2d_sign(const Point2& a, const Point2& b, const Point2& c) {
    double detleft = (a.x - c.x) * (b.y - c.y);
    double detright = (a.y - c.y) * (b.x - c.x);
    double det = detleft - detright;
    double detsum = std::fabs(detleft) + std::fabs(detright);
    double errbound = kCcwErrBoundA * detsum + kUnderflowGuard;
    if (det > errbound || -det > errbound) return sign_of(det);
    return orient2d_exact(a, b, c);
}

int incircle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    double adx = a.x - d.x, ady = a.y - d.y;
    double bdx = b.x - d.x, bdy = b.y - d.y;
    double cdx = c.x - d.x, cdy = c.y - d.y;

    double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    double alift = adx * adx + ady * ady;
    double cdxady = cdx * ady, adxcdy = adx * cdy;
    double blift = bdx * bdx + bdy * bdy;
    double adxbdy = adx * bdy, bdxady = bdx * ady;
    double clift = cdx * cdx + cdy * cdy;

    double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                 clift * (adxbdy - bdxady);
    double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                       (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                       (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    double errbound = kIccErrBoundA * permanent + kUnderflowGuard;
    if (det > errbound || -det > errbound) return sign_of(det);
    return incircle_exact(a, b, c, d);
}

int incircle_perturbed(const Point2& a, VertexId ia, const Point2& b, VertexId ib,
                       const Point2& c, VertexId ic, const Point2& d, VertexId id) {
    int s = incircle_sign(a, b, c, d);
    if (s != 0) return s;

    // Cocircular: the perturbed determinant is dominated by the weight of the
    // lowest-indexed point whose cofactor does not vanish. Cofactor signs come
    // from expanding the lifted determinant along the lift column.
    struct Term {
        VertexId id;
        int sign; // contribution = sign * orient(other three)
        const Point2 *p0, *p1, *p2;
    };
    Term terms[4] = {
        {ia, -1, &b, &c, &d},
        {ib, +1, &a, &c, &d},
        {ic, -1, &a, &b, &d},
        {id, +1, &a, &b, &c},
    };
    std::sort(terms, terms + 4, [](const Term& l, const Term& r) { return l.id < r.id; });
    for (const Term& t : terms) {
        int o = orient2d_sign(*t.p0, *t.p1, *t.p2);
        if (o != 0) return t.sign * o;
    }
    throw InternalError("incircle_perturbed: degenerate beyond perturbation "
                        "(duplicate input points?)");
}

} // namespace detail

Orientation orient2d(const Point2& a, const Point2& b, const Point2& c) {
    return static_cast<Orientation>(detail::orient2d_sign(a, b, c));
}

CirclePosition in_circumcircle(const Point2& a, const Point2& b, const Point2& c,
                               const Point2& d) {
    if (detail::orient2d_sign(a, b, c) != 1) {
        throw InvalidParameter("in_circumcircle: (a, b, c) must be counter-clockwise");
    }
    return static_cast<CirclePosition>(detail::incircle_sign(a, b, c, d));
}

} // namespace dnnclust
