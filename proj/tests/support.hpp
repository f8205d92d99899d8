#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "covagram/lattice.hpp"
#include "covagram/region.hpp"

namespace covagram::testsupport {

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, int max_abs_num, int max_den) {
  return make_rational(rand_int(rng, -max_abs_num, max_abs_num), rand_int(rng, 1, max_den));
}

inline LatticeSet rand_lattice_set(Rng& rng, int max_size, int box) {
  int size = static_cast<int>(rand_int(rng, 1, max_size));
  std::set<LatticePoint> pts;
  while (static_cast<int>(pts.size()) < size)
    pts.insert({rand_int(rng, -box, box), rand_int(rng, -box, box)});
  return LatticeSet(std::vector<LatticePoint>(pts.begin(), pts.end()));
}

// Random connected cell set grown one neighbor at a time.
inline Polyomino rand_polyomino(Rng& rng, int cells) {
  std::set<LatticePoint> placed{{0, 0}};
  std::vector<LatticePoint> order{{0, 0}};
  while (static_cast<int>(placed.size()) < cells) {
    LatticePoint base = order[static_cast<std::size_t>(
        rand_int(rng, 0, static_cast<std::int64_t>(order.size()) - 1))];
    static const LatticePoint deltas[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    LatticePoint next = base + deltas[rand_int(rng, 0, 3)];
    if (placed.insert(next).second) order.push_back(next);
  }
  return Polyomino(LatticeSet(std::vector<LatticePoint>(placed.begin(), placed.end())));
}

inline Rect rand_rect(Rng& rng, int span, int max_den) {
  Rational x0 = rand_rational(rng, span, max_den);
  Rational y0 = rand_rational(rng, span, max_den);
  Rational w = rand_rational(rng, span, max_den);
  Rational h = rand_rational(rng, span, max_den);
  if (w <= 0) w = 1 - w;
  if (h <= 0) h = 1 - h;
  return Rect(x0, x0 + w, y0, y0 + h);
}

inline RectUnion rand_rect_union(Rng& rng, int max_rects, int span = 3, int max_den = 5) {
  int count = static_cast<int>(rand_int(rng, 1, max_rects));
  std::vector<Rect> rects;
  rects.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) rects.push_back(rand_rect(rng, span, max_den));
  return RectUnion(std::move(rects));
}

// A rectangle realized as a union of overlapping tiles: cut a base rectangle
// by random interior grid lines, then expand every tile to a random
// sub-rectangle of the base that still contains it. The union is the base
// rectangle itself, so the region is convex however it is represented.
inline RectUnion rand_convex_union(Rng& rng) {
  Rect base = rand_rect(rng, 3, 4);
  auto cuts = [&](const Rational& lo, const Rational& hi) {
    std::vector<Rational> cs{lo};
    int extra = static_cast<int>(rand_int(rng, 0, 2));
    for (int i = 0; i < extra; ++i) {
      Rational t = make_rational(rand_int(rng, 1, 7), 8);
      cs.push_back(lo + (hi - lo) * t);
    }
    cs.push_back(hi);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
  };
  std::vector<Rational> xs = cuts(base.x0, base.x1);
  std::vector<Rational> ys = cuts(base.y0, base.y1);
  auto stretch_lo = [&](const Rational& bound, const Rational& at) {
    return rand_int(rng, 0, 1) ? bound : at;
  };
  std::vector<Rect> tiles;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      Rational x0 = stretch_lo(base.x0, xs[i]);
      Rational x1 = stretch_lo(base.x1, xs[i + 1]);
      Rational y0 = stretch_lo(base.y0, ys[j]);
      Rational y1 = stretch_lo(base.y1, ys[j + 1]);
      tiles.emplace_back(x0, x1, y0, y1);
    }
  }
  return RectUnion(std::move(tiles));
}

// Independent multiset oracle used against difference_multiset.
inline std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> naive_multiset(
    const LatticeSet& s) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;
  for (const auto& p : s.points())
    for (const auto& q : s.points()) ++counts[{p.x - q.x, p.y - q.y}];
  return counts;
}

// Union area by inclusion-exclusion over all subsets; independent of the
// sweep decomposition. Practical for a handful of rectangles.
inline Rational inclusion_exclusion_area(const std::vector<Rect>& rects) {
  const std::size_t n = rects.size();
  Rational total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Rational x0, x1, y0, y1;
    bool first = true;
    bool empty = false;
    int bits = 0;
    for (std::size_t i = 0; i < n && !empty; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++bits;
      if (first) {
        x0 = rects[i].x0;
        x1 = rects[i].x1;
        y0 = rects[i].y0;
        y1 = rects[i].y1;
        first = false;
      } else {
        x0 = std::max(x0, rects[i].x0);
        x1 = std::min(x1, rects[i].x1);
        y0 = std::max(y0, rects[i].y0);
        y1 = std::min(y1, rects[i].y1);
        if (!(x0 < x1 && y0 < y1)) empty = true;
      }
    }
    if (empty) continue;
    Rational piece = (x1 - x0) * (y1 - y0);
    total += (bits % 2 == 1) ? piece : Rational(-piece);
  }
  return total;
}

// Grid-subset enumeration in the style of generating every point set of a
// bounded board and filtering: counts translation classes of d-cell
// polyominoes by anchoring at row 0 and column 0. Practical for d <= 6.
// Unlike the grid bounds hard-coded per cell count in the original tooling
// (which assume height <= width), the full d x d board is sound for every
// polyomino shape.
inline std::int64_t naive_fixed_count(int d) {
  const int cells = d * d;
  std::uint64_t row0 = 0, col0 = 0;
  for (int c = 0; c < d; ++c) row0 |= std::uint64_t{1} << c;
  for (int r = 0; r < d; ++r) col0 |= std::uint64_t{1} << (r * d);
  // wrap guards: shifts across the row boundary must not leak
  std::uint64_t colLast = col0 << (d - 1);
  auto connected_fixed = [&](std::uint64_t mask) {
    std::uint64_t seed = mask & (~mask + 1);
    std::uint64_t reach = seed;
    for (;;) {
      std::uint64_t grow = reach;
      grow |= (reach & ~colLast) << 1;
      grow |= (reach & ~col0) >> 1;
      grow |= reach << d;
      grow |= reach >> d;
      grow &= mask;
      if (grow == reach) break;
      reach = grow;
    }
    return reach == mask;
  };
  std::int64_t count = 0;
  // Gosper's hack over all d-subsets of the board.
  std::uint64_t mask = (std::uint64_t{1} << d) - 1;
  const std::uint64_t limit = std::uint64_t{1} << cells;
  while (mask < limit) {
    if ((mask & row0) && (mask & col0) && connected_fixed(mask)) ++count;
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return count;
}

// Second enumeration strategy: breadth-first growth from the single cell,
// deduplicated by translation canonical form at every level.
inline std::vector<LatticeSet> grow_fixed(int d) {
  std::set<std::vector<LatticePoint>> level{{LatticePoint{0, 0}}};
  for (int size = 1; size < d; ++size) {
    std::set<std::vector<LatticePoint>> next;
    for (const auto& pts : level) {
      LatticeSet base(pts);
      for (const auto& cell : base.points()) {
        static const LatticePoint deltas[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& delta : deltas) {
          LatticePoint cand = cell + delta;
          if (base.contains(cand)) continue;
          std::vector<LatticePoint> grown = base.points();
          grown.push_back(cand);
          LatticeSet grown_set(std::move(grown));
          next.insert(grown_set.translated(-grown_set.min_point()).points());
        }
      }
    }
    level = std::move(next);
  }
  std::vector<LatticeSet> out;
  out.reserve(level.size());
  for (const auto& pts : level) out.emplace_back(pts);
  return out;
}

// Frozen fixture: a 3-point and a 5-point set whose sum and difference are
// homometric non-congruent convex 15-point polyominoes, found by exhaustive
// search over small boxes.
inline LatticeSet fixture15_a() { return LatticeSet({{0, 0}, {0, 1}, {1, 2}}); }
inline LatticeSet fixture15_b() {
  return LatticeSet({{0, 0}, {1, 0}, {1, 3}, {2, 3}, {3, 3}});
}

inline LatticeSet tromino_l() { return LatticeSet({{0, 0}, {1, 0}, {0, 1}}); }
inline LatticeSet tromino_2l() { return LatticeSet({{0, 0}, {2, 0}, {0, 2}}); }

}  // namespace covagram::testsupport
