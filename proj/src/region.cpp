#include "covagram/region.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace covagram {

namespace {

bool lex_less(const RatPoint& a, const RatPoint& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

Rational cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

struct IdxRect {
  int x0, x1, y0, y1;
  friend auto operator<=>(const IdxRect&, const IdxRect&) = default;
};

std::vector<Rect> canonical_decomposition(const std::vector<Rect>& in) {
  if (in.empty()) return {};

  std::vector<Rational> xs, ys;
  xs.reserve(in.size() * 2);
  ys.reserve(in.size() * 2);
  for (const Rect& r : in) {
    xs.push_back(r.x0);
    xs.push_back(r.x1);
    ys.push_back(r.y0);
    ys.push_back(r.y1);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  auto x_index = [&](const Rational& v) {
    return static_cast<int>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
  };
  auto y_index = [&](const Rational& v) {
    return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
  };

  std::vector<IdxRect> rects;
  rects.reserve(in.size());
  for (const Rect& r : in)
    rects.push_back({x_index(r.x0), x_index(r.x1), y_index(r.y0), y_index(r.y1)});
  std::sort(rects.begin(), rects.end());
  rects.erase(std::unique(rects.begin(), rects.end()), rects.end());

  // Sweep the x-cuts left to right, maintaining the multiset of active
  // y-intervals; per slab the merged maximal intervals form the vertical
  // cross-section, and runs of identical cross-sections merge horizontally.
  const int cut_count = static_cast<int>(xs.size());
  std::vector<std::vector<std::pair<int, int>>> starts(cut_count), ends(cut_count);
  for (const IdxRect& r : rects) {
    starts[static_cast<std::size_t>(r.x0)].push_back({r.y0, r.y1});
    ends[static_cast<std::size_t>(r.x1)].push_back({r.y0, r.y1});
  }

  std::multiset<std::pair<int, int>> active;
  std::map<std::pair<int, int>, int> open;  // interval -> x-cut where the run began
  std::vector<IdxRect> out;
  for (int k = 0; k < cut_count; ++k) {
    for (const auto& iv : ends[static_cast<std::size_t>(k)]) active.erase(active.find(iv));
    for (const auto& iv : starts[static_cast<std::size_t>(k)]) active.insert(iv);

    std::vector<std::pair<int, int>> merged;
    for (const auto& iv : active) {
      if (!merged.empty() && iv.first <= merged.back().second)
        merged.back().second = std::max(merged.back().second, iv.second);
      else
        merged.push_back(iv);
    }

    for (auto it = open.begin(); it != open.end();) {
      if (!std::binary_search(merged.begin(), merged.end(), it->first)) {
        out.push_back({it->second, k, it->first.first, it->first.second});
        it = open.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& iv : merged) open.try_emplace(iv, k);
  }
  assert(open.empty());
  assert(active.empty());

  std::sort(out.begin(), out.end());
  std::vector<Rect> result;
  result.reserve(out.size());
  for (const IdxRect& r : out)
    result.emplace_back(xs[static_cast<std::size_t>(r.x0)], xs[static_cast<std::size_t>(r.x1)],
                        ys[static_cast<std::size_t>(r.y0)], ys[static_cast<std::size_t>(r.y1)]);
  return result;
}

}  // namespace

Rect::Rect(Rational x0_in, Rational x1_in, Rational y0_in, Rational y1_in)
    : x0(std::move(x0_in)), x1(std::move(x1_in)), y0(std::move(y0_in)), y1(std::move(y1_in)) {
  if (!(x0 < x1) || !(y0 < y1))
    throw std::invalid_argument("degenerate rectangle: requires x0 < x1 and y0 < y1");
}

RectUnion::RectUnion(std::vector<Rect> rects) : rects_(canonical_decomposition(rects)) {}

Rational area(const RectUnion& r) {
  Rational total = 0;
  for (const Rect& rect : r.rects()) total += rect.width() * rect.height();
  return total;
}

RectUnion translate(const RectUnion& r, const RatPoint& v) {
  std::vector<Rect> rs;
  rs.reserve(r.rects().size());
  for (const Rect& a : r.rects()) rs.emplace_back(a.x0 + v.x, a.x1 + v.x, a.y0 + v.y, a.y1 + v.y);
  return RectUnion(std::move(rs), RectUnion::canonical_tag{});
}

RectUnion point_reflected(const RectUnion& r) {
  std::vector<Rect> rs;
  rs.reserve(r.rects().size());
  for (const Rect& a : r.rects()) rs.emplace_back(-a.x1, -a.x0, -a.y1, -a.y0);
  std::sort(rs.begin(), rs.end(), [](const Rect& a, const Rect& b) {
    if (a.x0 != b.x0) return a.x0 < b.x0;
    if (a.x1 != b.x1) return a.x1 < b.x1;
    if (a.y0 != b.y0) return a.y0 < b.y0;
    return a.y1 < b.y1;
  });
  return RectUnion(std::move(rs), RectUnion::canonical_tag{});
}

RectUnion intersect(const RectUnion& r, const RectUnion& s) {
  std::vector<Rect> out;
  for (const Rect& a : r.rects()) {
    for (const Rect& b : s.rects()) {
      Rational x0 = std::max(a.x0, b.x0);
      Rational x1 = std::min(a.x1, b.x1);
      if (!(x0 < x1)) continue;
      Rational y0 = std::max(a.y0, b.y0);
      Rational y1 = std::min(a.y1, b.y1);
      if (!(y0 < y1)) continue;
      out.emplace_back(std::move(x0), std::move(x1), std::move(y0), std::move(y1));
    }
  }
  return RectUnion(std::move(out));
}

RectUnion difference_body(const RectUnion& r) {
  std::vector<Rect> out;
  out.reserve(r.rects().size() * r.rects().size());
  for (const Rect& a : r.rects())
    for (const Rect& b : r.rects())
      out.emplace_back(a.x0 - b.x1, a.x1 - b.x0, a.y0 - b.y1, a.y1 - b.y0);
  return RectUnion(std::move(out));
}

ConvexPolygon::ConvexPolygon(std::vector<RatPoint> ccw_vertices)
    : vertices_(std::move(ccw_vertices)) {
  if (vertices_.size() < 3)
    throw std::invalid_argument("convex polygon needs at least 3 vertices");
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& a = vertices_[i];
    const RatPoint& b = vertices_[(i + 1) % n];
    const RatPoint& c = vertices_[(i + 2) % n];
    if (!(cross(a, b, c) > 0))
      throw std::invalid_argument("vertices are not strictly convex counterclockwise");
  }
  auto start = std::min_element(vertices_.begin(), vertices_.end(), lex_less);
  std::rotate(vertices_.begin(), start, vertices_.end());
}

Rational ConvexPolygon::area() const {
  Rational twice = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatPoint& a = vertices_[i];
    const RatPoint& b = vertices_[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

ConvexPolygon convex_hull_of_points(std::vector<RatPoint> points) {
  auto eq = [](const RatPoint& a, const RatPoint& b) { return a == b; };
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(), eq), points.end());
  const std::size_t n = points.size();
  if (n < 3) throw std::invalid_argument("convex hull is degenerate");
  std::vector<RatPoint> hull(2 * n, points[0]);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && !(cross(hull[k - 2], hull[k - 1], points[i]) > 0)) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && !(cross(hull[k - 2], hull[k - 1], points[i]) > 0)) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw std::invalid_argument("convex hull is degenerate");
  return ConvexPolygon(std::move(hull));
}

ConvexPolygon convex_hull(const RectUnion& r) {
  if (r.is_empty()) throw std::invalid_argument("convex hull of empty region");
  std::vector<RatPoint> corners;
  corners.reserve(r.rects().size() * 4);
  for (const Rect& rect : r.rects()) {
    corners.push_back({rect.x0, rect.y0});
    corners.push_back({rect.x1, rect.y0});
    corners.push_back({rect.x1, rect.y1});
    corners.push_back({rect.x0, rect.y1});
  }
  return convex_hull_of_points(std::move(corners));
}

ConvexPolygon minkowski_difference_body_convex(const ConvexPolygon& p) {
  std::vector<RatPoint> negated;
  negated.reserve(p.vertices().size());
  for (const RatPoint& v : p.vertices()) negated.push_back(-v);
  ConvexPolygon reflected(std::move(negated));

  auto edges_of = [](const ConvexPolygon& poly) {
    const auto& vs = poly.vertices();
    std::vector<RatPoint> edges;
    edges.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
      edges.push_back(vs[(i + 1) % vs.size()] - vs[i]);
    return edges;
  };

  std::vector<RatPoint> all = edges_of(p);
  std::vector<RatPoint> other = edges_of(reflected);
  all.insert(all.end(), other.begin(), other.end());

  // Angular order starting just past "straight down": at the lexicographic
  // minimum vertex the outgoing edge of a CCW polygon points into the open
  // right half-plane, so both edge cycles are already sorted this way.
  auto half = [](const RatPoint& e) { return (e.x > 0 || (e.x == 0 && e.y > 0)) ? 0 : 1; };
  std::sort(all.begin(), all.end(), [&](const RatPoint& u, const RatPoint& v) {
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return u.x * v.y - u.y * v.x > 0;
  });

  std::vector<RatPoint> merged;
  for (const RatPoint& e : all) {
    if (!merged.empty() && merged.back().x * e.y - merged.back().y * e.x == 0)
      merged.back() = merged.back() + e;
    else
      merged.push_back(e);
  }

  RatPoint start = p.vertices().front() + reflected.vertices().front();
  std::vector<RatPoint> vertices;
  vertices.reserve(merged.size());
  vertices.push_back(start);
  RatPoint cursor = start;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    cursor = cursor + merged[i];
    vertices.push_back(cursor);
  }
  assert(cursor + merged.back() == start);
  return ConvexPolygon(std::move(vertices));
}

Direction::Direction(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p_ == 0 && q_ == 0) throw std::invalid_argument("direction must be non-zero");
  std::int64_t g = std::gcd(p_ < 0 ? -p_ : p_, q_ < 0 ? -q_ : q_);
  p_ /= g;
  q_ /= g;
  if (p_ < 0 || (p_ == 0 && q_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

Rational support_value_raw(const ConvexPolygon& poly, std::int64_t p, std::int64_t q) {
  const auto& vs = poly.vertices();
  Rational best = vs.front().x * p + vs.front().y * q;
  for (const RatPoint& v : vs) {
    Rational value = v.x * p + v.y * q;
    if (value > best) best = value;
  }
  return best;
}

Rational support_value_raw(const RectUnion& r, std::int64_t p, std::int64_t q) {
  if (r.is_empty()) throw std::invalid_argument("support of empty region");
  bool first = true;
  Rational best = 0;
  for (const Rect& rect : r.rects()) {
    Rational value = (p > 0 ? rect.x1 : rect.x0) * p + (q > 0 ? rect.y1 : rect.y0) * q;
    if (first || value > best) {
      best = std::move(value);
      first = false;
    }
  }
  return best;
}

Rational support_value(const ConvexPolygon& poly, const Direction& d) {
  return support_value_raw(poly, d.p(), d.q());
}

Rational support_value(const RectUnion& r, const Direction& d) {
  return support_value_raw(r, d.p(), d.q());
}

Rational width_scaled(const ConvexPolygon& poly, const Direction& d) {
  return support_value_raw(poly, d.p(), d.q()) + support_value_raw(poly, -d.p(), -d.q());
}

Rational width_scaled(const RectUnion& r, const Direction& d) {
  return support_value_raw(r, d.p(), d.q()) + support_value_raw(r, -d.p(), -d.q());
}

bool is_convex_region(const RectUnion& r) {
  if (r.is_empty()) return false;
  return area(r) == convex_hull(r).area();
}

std::vector<std::pair<Rational, Rational>> section_segments(const RectUnion& r,
                                                            const Direction& d,
                                                            const Rational& t) {
  const std::int64_t p = d.p();
  const std::int64_t q = d.q();
  const std::int64_t n = d.squared_norm();

  std::vector<std::pair<Rational, Rational>> intervals;
  for (const Rect& rect : r.rects()) {
    bool hit = true;
    bool bounded = false;
    Rational lo, hi;
    auto clamp = [&](Rational a, Rational b) {
      if (!bounded) {
        lo = std::move(a);
        hi = std::move(b);
        bounded = true;
      } else {
        if (a > lo) lo = std::move(a);
        if (b < hi) hi = std::move(b);
      }
    };
    if (p != 0) {
      Rational a = (rect.x0 * n + t * q) / p;
      Rational b = (rect.x1 * n + t * q) / p;
      if (p < 0) std::swap(a, b);
      clamp(std::move(a), std::move(b));
    } else {
      Rational x = t * (-q) / n;
      if (!(rect.x0 <= x && x <= rect.x1)) hit = false;
    }
    if (hit) {
      if (q != 0) {
        Rational a = (rect.y0 * n - t * p) / q;
        Rational b = (rect.y1 * n - t * p) / q;
        if (q < 0) std::swap(a, b);
        clamp(std::move(a), std::move(b));
      } else {
        Rational y = t * p / n;
        if (!(rect.y0 <= y && y <= rect.y1)) hit = false;
      }
    }
    if (!hit || !bounded) continue;
    if (lo < hi) intervals.emplace_back(std::move(lo), std::move(hi));
  }

  std::sort(intervals.begin(), intervals.end());
  std::vector<std::pair<Rational, Rational>> mergedv;
  for (auto& iv : intervals) {
    if (!mergedv.empty() && iv.first <= mergedv.back().second) {
      if (iv.second > mergedv.back().second) mergedv.back().second = std::move(iv.second);
    } else {
      mergedv.push_back(std::move(iv));
    }
  }
  return mergedv;
}

SegmentProfile segment_profile(const RectUnion& r, const Direction& d) {
  SegmentProfile profile{d, {}};
  if (r.is_empty()) return profile;
  const std::int64_t p = d.p();
  const std::int64_t q = d.q();

  std::vector<Rational> cuts;
  cuts.reserve(r.rects().size() * 4);
  for (const Rect& rect : r.rects()) {
    cuts.push_back(rect.x0 * (-q) + rect.y0 * p);
    cuts.push_back(rect.x0 * (-q) + rect.y1 * p);
    cuts.push_back(rect.x1 * (-q) + rect.y0 * p);
    cuts.push_back(rect.x1 * (-q) + rect.y1 * p);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  profile.bands.reserve(cuts.size() - 1);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Rational mid = (cuts[k] + cuts[k + 1]) / 2;
    auto segments = section_segments(r, d, mid);
    Rational length = 0;
    for (const auto& [lo, hi] : segments) length += hi - lo;
    profile.bands.push_back(
        {cuts[k], cuts[k + 1], static_cast<int>(segments.size()), std::move(length)});
  }
  return profile;
}

Rational SegmentProfile::count_integral() const {
  Rational total = 0;
  for (const ProfileBand& band : bands) total += (band.t_hi - band.t_lo) * band.segment_count;
  return total;
}

Rational SegmentProfile::chord_defect() const {
  Rational total = 0;
  for (const ProfileBand& band : bands)
    total += (band.t_hi - band.t_lo) * (band.segment_count - 1);
  return total;
}

Rational SegmentProfile::transverse_extent() const {
  if (bands.empty()) return 0;
  return bands.back().t_hi - bands.front().t_lo;
}

Rational SegmentProfile::area_from_sections() const {
  Rational total = 0;
  for (const ProfileBand& band : bands)
    total += (band.t_hi - band.t_lo) * band.section_length_mid;
  return total / direction.squared_norm();
}

}  // namespace covagram
