#include "covagram/covariogram.hpp"

#include <utility>
#include <vector>

namespace covagram {

Rational unit_square_covariogram(const RatPoint& x) {
  Rational fx = 1 - abs(x.x);
  if (fx <= 0) return 0;
  Rational fy = 1 - abs(x.y);
  if (fy <= 0) return 0;
  return fx * fy;
}

Rational region_covariogram(const RectUnion& r, const RatPoint& x) {
  return area(intersect(r, translate(r, x)));
}

RectUnion animal_region(const Polyomino& p) {
  std::vector<Rect> cells;
  cells.reserve(p.size());
  for (const LatticePoint& c : p.cells().points())
    cells.emplace_back(Rational(c.x), Rational(c.x + 1), Rational(c.y), Rational(c.y + 1));
  return RectUnion(std::move(cells));
}

AnimalCovariogram::AnimalCovariogram(Polyomino p)
    : polyomino_(std::move(p)), multiset_(difference_multiset(polyomino_.cells())) {}

Rational AnimalCovariogram::operator()(const RatPoint& x) const {
  // g_Q(z + x) vanishes unless z is within (-1, 1) of -x in both
  // coordinates, which leaves at most two integer candidates per axis.
  LatticeBox box = polyomino_.cells().bounding_box();
  if (abs(x.x) >= box.max_x - box.min_x + 1) return 0;
  if (abs(x.y) >= box.max_y - box.min_y + 1) return 0;
  std::int64_t zx0 = static_cast<std::int64_t>(floor_of(-x.x).get_si());
  std::int64_t zy0 = static_cast<std::int64_t>(floor_of(-x.y).get_si());
  Rational total = 0;
  for (std::int64_t zx = zx0; zx <= zx0 + 1; ++zx) {
    for (std::int64_t zy = zy0; zy <= zy0 + 1; ++zy) {
      std::int64_t m = multiset_.multiplicity({zx, zy});
      if (m == 0) continue;
      Rational g = unit_square_covariogram({zx + x.x, zy + x.y});
      if (g != 0) total += g * m;
    }
  }
  return total;
}

Rational animal_covariogram(const Polyomino& p, const RatPoint& x) {
  return AnimalCovariogram(p)(x);
}

RectUnion support_of_covariogram(const RectUnion& r) { return difference_body(r); }

DerivativeAtZero derivative_at_zero(const RectUnion& r, const Direction& d) {
  SegmentProfile profile = segment_profile(r, d);
  return DerivativeAtZero{d, profile.count_integral(), true};
}

}  // namespace covagram
