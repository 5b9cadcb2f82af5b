#pragma once

#include "tverwind/rational.hpp"

#include <span>
#include <variant>
#include <vector>

namespace tverwind {

struct Segment {
    Rational2 a;
    Rational2 b;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(const Rational2& p, const Rational2& q, const Rational2& r);

/// True iff p lies on the closed segment s.
bool on_segment(const Rational2& p, const Segment& s);

struct IntersectionResult {
    enum class Kind { empty, point, overlap };

    Kind kind = Kind::empty;
    /// monostate for empty, the crossing point, or the maximal common subsegment.
    std::variant<std::monostate, Rational2, Segment> witness;

    bool empty() const { return kind == Kind::empty; }
    const Rational2& point() const { return std::get<Rational2>(witness); }
    const Segment& overlap() const { return std::get<Segment>(witness); }
};

/// Exact intersection of two closed segments. Touching endpoints count as a
/// point intersection; collinear overlaps of positive length are reported as
/// an overlap with the common subsegment oriented along increasing (x, y).
IntersectionResult segment_intersect(const Segment& s, const Segment& t);

/// Closed polygonal curve; the last point connects back to the first.
class ClosedPLCurve {
public:
    /// Throws InvalidArgument unless there are at least 3 points and
    /// cyclically consecutive points differ.
    explicit ClosedPLCurve(std::vector<Rational2> points);

    std::span<const Rational2> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    Segment segment(std::size_t i) const;

    ClosedPLCurve reversed() const;

private:
    std::vector<Rational2> points_;
};

bool point_on_curve(const Rational2& p, const ClosedPLCurve& c);

/// Signed contribution of the directed segment a -> b to the winding number
/// around p, using the horizontal ray to +x and the half-open rule on y.
/// Summing over the segments of a closed curve not through p gives its
/// winding number. Zero-length segments contribute nothing.
int ray_crossing(const Rational2& a, const Rational2& b, const Rational2& p);

/// Counterclockwise-positive winding number. Throws PointOnCurve if p is on c.
int winding_number(const ClosedPLCurve& c, const Rational2& p);

/// Membership in the closed set made of the curve and every point it winds
/// around a nonzero number of times.
bool in_w_neq0(const ClosedPLCurve& c, const Rational2& p);

}  // namespace tverwind
