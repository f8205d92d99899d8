#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "covagram/rational.hpp"

namespace covagram {

struct RatPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

inline RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
inline RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline RatPoint operator-(const RatPoint& a) { return {-a.x, -a.y}; }

// Closed axis-aligned rectangle with positive area: x0 < x1, y0 < y1.
// The constructor rejects degenerate input.
struct Rect {
  Rect(Rational x0, Rational x1, Rational y0, Rational y1);
  Rational x0, x1, y0, y1;
  Rational width() const { return x1 - x0; }
  Rational height() const { return y1 - y0; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Finite union of closed axis-aligned rectangles, stored in a canonical
// pairwise interior-disjoint decomposition: vertical slabs cut at the
// x-coordinates where the vertical cross-section changes, maximal
// y-intervals per slab, maximal horizontal runs. Two inputs describing the
// same point set produce identical decompositions. The represented set is
// regular compact (closure of its interior).
class RectUnion {
 public:
  RectUnion() = default;  // empty region
  explicit RectUnion(std::vector<Rect> rects);

  const std::vector<Rect>& rects() const { return rects_; }
  bool is_empty() const { return rects_.empty(); }

  friend bool operator==(const RectUnion&, const RectUnion&) = default;

 private:
  struct canonical_tag {};
  RectUnion(std::vector<Rect> rects, canonical_tag) : rects_(std::move(rects)) {}

  std::vector<Rect> rects_;

  friend RectUnion translate(const RectUnion&, const RatPoint&);
  friend RectUnion point_reflected(const RectUnion&);
};

// Exact convex polygon: vertices in counterclockwise order, strictly convex
// (no three consecutive collinear), positive area. The vertex list starts at
// the lexicographically least vertex so equal polygons compare equal.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<RatPoint> ccw_vertices);

  const std::vector<RatPoint>& vertices() const { return vertices_; }
  Rational area() const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  std::vector<RatPoint> vertices_;
};

// Primitive integer direction: gcd(|p|, |q|) == 1, normalized so that (p, q)
// is lexicographically positive. Represents u = (p, q)/||(p, q)||; all
// support and width quantities below stay in ||(p, q)||-scaled form so that
// comparisons between them remain exact.
class Direction {
 public:
  Direction(std::int64_t p, std::int64_t q);
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  Direction perpendicular() const { return Direction(-q_, p_); }
  std::int64_t squared_norm() const { return p_ * p_ + q_ * q_; }
  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

Rational area(const RectUnion& r);
RectUnion translate(const RectUnion& r, const RatPoint& v);
RectUnion point_reflected(const RectUnion& r);
RectUnion intersect(const RectUnion& r, const RectUnion& s);

// The difference set r + (-r): union of all pairwise differences of the
// canonical rectangles. Centrally symmetric about the origin.
RectUnion difference_body(const RectUnion& r);

ConvexPolygon convex_hull(const RectUnion& r);
ConvexPolygon convex_hull_of_points(std::vector<RatPoint> points);

// p + (-p) for a convex polygon, by merging the two angularly sorted edge
// sequences. Satisfies width(result, u) = 2 width(p, u) for every u.
ConvexPolygon minkowski_difference_body_convex(const ConvexPolygon& p);

// Scaled support value h(p, q) = max over vertices/corners of p*x + q*y.
Rational support_value(const ConvexPolygon& poly, const Direction& d);
Rational support_value(const RectUnion& r, const Direction& d);
Rational support_value_raw(const ConvexPolygon& poly, std::int64_t p, std::int64_t q);
Rational support_value_raw(const RectUnion& r, std::int64_t p, std::int64_t q);

// h(p, q) + h(-p, -q) = ||(p, q)|| * width in direction (p, q).
Rational width_scaled(const ConvexPolygon& poly, const Direction& d);
Rational width_scaled(const RectUnion& r, const Direction& d);

// Exact convexity test: area(r) equals the area of its convex hull.
bool is_convex_region(const RectUnion& r);

// Merged closed segments of the section of r by the line
// {-q*x + p*y = t}, as intervals of the scaled coordinate s = p*x + q*y.
std::vector<std::pair<Rational, Rational>> section_segments(const RectUnion& r,
                                                            const Direction& d,
                                                            const Rational& t);

struct ProfileBand {
  Rational t_lo;
  Rational t_hi;
  int segment_count = 0;          // N(t), constant on the open band
  Rational section_length_mid;    // scaled section length at the band midpoint
};

// Piecewise-constant chord-count profile N(t) over the scaled transverse
// coordinate t = -q*x + p*y. Bands partition the full projection of r; the
// section combinatorics of a rectangle union can change only at corner
// projections, which are exactly the band breakpoints.
struct SegmentProfile {
  Direction direction;
  std::vector<ProfileBand> bands;

  Rational count_integral() const;     // integral of N(t) dt
  Rational chord_defect() const;       // integral of (N(t) - 1) dt
  Rational transverse_extent() const;  // t_max - t_min
  // area recovered from section lengths: the Fubini route, independent of
  // the slab decomposition sweep. Section lengths are linear on each band,
  // so the midpoint rule integrates them exactly.
  Rational area_from_sections() const;
};

SegmentProfile segment_profile(const RectUnion& r, const Direction& d);

}  // namespace covagram
