#include "tverwind/exactgeom.hpp"

#include "tverwind/errors.hpp"

#include <algorithm>

namespace tverwind {

namespace {

Rational cross(const Rational2& u, const Rational2& v) { return u.x * v.y - u.y * v.x; }

}  // namespace

int orient(const Rational2& p, const Rational2& q, const Rational2& r) {
    Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

namespace {

// Closed bounding-box overlap; a cheap reject before the orientation tests.
bool boxes_meet(const Segment& s, const Segment& t) {
    const auto& [sx0, sx1] = std::minmax(s.a.x, s.b.x);
    const auto& [tx0, tx1] = std::minmax(t.a.x, t.b.x);
    if (sx1 < tx0 || tx1 < sx0) return false;
    const auto& [sy0, sy1] = std::minmax(s.a.y, s.b.y);
    const auto& [ty0, ty1] = std::minmax(t.a.y, t.b.y);
    return !(sy1 < ty0 || ty1 < sy0);
}

}  // namespace

bool on_segment(const Rational2& p, const Segment& s) {
    const auto& [x0, x1] = std::minmax(s.a.x, s.b.x);
    if (p.x < x0 || x1 < p.x) return false;
    const auto& [y0, y1] = std::minmax(s.a.y, s.b.y);
    if (p.y < y0 || y1 < p.y) return false;
    return orient(s.a, s.b, p) == 0;
}

IntersectionResult segment_intersect(const Segment& s, const Segment& t) {
    if (!boxes_meet(s, t)) return {};
    const int o1 = orient(s.a, s.b, t.a);
    const int o2 = orient(s.a, s.b, t.b);

    if (o1 == 0 && o2 == 0) {
        // Collinear: along a line the lexicographic order is monotone.
        auto [s0, s1] = std::minmax(s.a, s.b);
        auto [t0, t1] = std::minmax(t.a, t.b);
        const Rational2& lo = std::max(s0, t0);
        const Rational2& hi = std::min(s1, t1);
        if (hi < lo) return {};
        if (lo == hi) return {IntersectionResult::Kind::point, lo};
        return {IntersectionResult::Kind::overlap, Segment{lo, hi}};
    }

    const int o3 = orient(t.a, t.b, s.a);
    const int o4 = orient(t.a, t.b, s.b);
    if (o1 * o2 > 0 || o3 * o4 > 0) return {};

    // Proper crossing or a touching endpoint. Resolve endpoint touches
    // directly so the answer never depends on argument order.
    if (o1 == 0) return {IntersectionResult::Kind::point, t.a};
    if (o2 == 0) return {IntersectionResult::Kind::point, t.b};
    if (o3 == 0) return {IntersectionResult::Kind::point, s.a};
    if (o4 == 0) return {IntersectionResult::Kind::point, s.b};

    const Rational2 d1 = s.b - s.a;
    const Rational2 d2 = t.b - t.a;
    Rational lambda = cross(t.a - s.a, d2) / cross(d1, d2);
    return {IntersectionResult::Kind::point,
            Rational2{s.a.x + lambda * d1.x, s.a.y + lambda * d1.y}};
}

ClosedPLCurve::ClosedPLCurve(std::vector<Rational2> points) : points_(std::move(points)) {
    if (points_.size() < 3) throw InvalidArgument("closed curve needs at least 3 points");
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == points_[(i + 1) % points_.size()])
            throw InvalidArgument("closed curve has a zero-length segment at index " +
                                  std::to_string(i));
}

Segment ClosedPLCurve::segment(std::size_t i) const {
    return {points_[i], points_[(i + 1) % points_.size()]};
}

ClosedPLCurve ClosedPLCurve::reversed() const {
    std::vector<Rational2> pts(points_.rbegin(), points_.rend());
    return ClosedPLCurve(std::move(pts));
}

bool point_on_curve(const Rational2& p, const ClosedPLCurve& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (on_segment(p, c.segment(i))) return true;
    return false;
}

int ray_crossing(const Rational2& a, const Rational2& b, const Rational2& p) {
    if (a.y <= p.y) {
        if (b.y > p.y && orient(a, b, p) > 0) return 1;  // upward, p strictly left
    } else if (b.y <= p.y && orient(a, b, p) < 0) {
        return -1;  // downward, p strictly right
    }
    return 0;
}

int winding_number(const ClosedPLCurve& c, const Rational2& p) {
    if (point_on_curve(p, c))
        throw PointOnCurve("point " + to_string(p) + " lies on the curve");
    int w = 0;
    const auto pts = c.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        w += ray_crossing(pts[i], pts[(i + 1) % pts.size()], p);
    return w;
}

bool in_w_neq0(const ClosedPLCurve& c, const Rational2& p) {
    if (point_on_curve(p, c)) return true;
    return winding_number(c, p) != 0;
}

}  // namespace tverwind
