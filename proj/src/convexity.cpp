#include "covagram/convexity.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "covagram/covariogram.hpp"

namespace covagram {

bool ConvexityReport::any_failure() const {
  if (support_convex.verdict == Verdict::Fail) return true;
  if (diffbody_equals_hull_diffbody.verdict == Verdict::Fail) return true;
  for (const auto& row : derivative_width)
    if (row.verdict == Verdict::Fail) return true;
  for (const auto& row : chord_condition_hp)
    if (row.verdict == Verdict::Fail) return true;
  if (rogers_shephard_bm.verdict == Verdict::Fail) return true;
  for (const auto& row : projection_bounds)
    if (row.verdict == Verdict::Fail) return true;
  return false;
}

std::vector<Direction> default_directions() {
  return {Direction(1, 0), Direction(0, 1), Direction(1, 1),
          Direction(1, -1), Direction(2, 1), Direction(1, 2)};
}

ConvexityReport run_battery(const RectUnion& r, const std::vector<Direction>& directions) {
  if (r.is_empty()) throw std::invalid_argument("convexity battery requires a non-empty region");
  if (directions.empty()) throw std::invalid_argument("convexity battery requires directions");

  ConvexityReport report;

  RectUnion db = difference_body(r);
  Rational db_area = area(db);

  // Route one: convexity of the difference set, tested against its own hull.
  ConvexPolygon db_hull = convex_hull(db);
  report.support_convex.hull_excess_area = db_hull.area() - db_area;
  report.support_convex.verdict =
      report.support_convex.hull_excess_area == 0 ? Verdict::Pass : Verdict::Fail;

  // Route two: difference set of the hull via the convex edge-merge sum.
  // DR is always contained in D(conv R), so the area gap is the exact area
  // of the symmetric difference.
  ConvexPolygon hull_diffbody = minkowski_difference_body_convex(convex_hull(r));
  report.diffbody_equals_hull_diffbody.symmetric_difference_area =
      hull_diffbody.area() - db_area;
  report.diffbody_equals_hull_diffbody.verdict =
      report.diffbody_equals_hull_diffbody.symmetric_difference_area == 0 ? Verdict::Pass
                                                                          : Verdict::Fail;

  for (const Direction& d : directions) {
    SegmentProfile profile = segment_profile(r, d);
    Rational derivative = profile.count_integral();
    Rational half_width = width_scaled(db, d.perpendicular()) / 2;

    DerivativeWidthResult dw{d, derivative == half_width ? Verdict::Pass : Verdict::Fail,
                             derivative, half_width};
    report.derivative_width.push_back(std::move(dw));

    Rational defect = profile.chord_defect();
    ChordConditionResult cc{d, defect == 0 ? Verdict::Pass : Verdict::Fail, std::move(defect)};
    report.chord_condition_hp.push_back(std::move(cc));

    // In the plane the projection bracket constants coincide at 1/2, so the
    // bound degenerates to the same equality as the derivative test.
    ProjectionBoundsResult pb{d,
                              (half_width <= derivative && derivative <= half_width)
                                  ? Verdict::Pass
                                  : Verdict::Fail,
                              derivative, half_width, half_width};
    report.projection_bounds.push_back(std::move(pb));
  }

  Rational g0 = area(r);
  report.rogers_shephard_bm.covariogram_at_zero = g0;
  report.rogers_shephard_bm.lower_bound = db_area / 6;
  report.rogers_shephard_bm.upper_bound = db_area / 4;
  report.rogers_shephard_bm.verdict =
      (report.rogers_shephard_bm.lower_bound <= g0 && g0 <= report.rogers_shephard_bm.upper_bound)
          ? Verdict::Pass
          : Verdict::Fail;

  report.overall = report.any_failure() ? Overall::DisprovedConvexity : Overall::Inconclusive;
  return report;
}

ConvexityReport run_battery(const RectUnion& r) { return run_battery(r, default_directions()); }

RectUnion generate_example_B() {
  Rational q = make_rational(1, 4);
  std::vector<Rect> rects;
  rects.emplace_back(Rational(0), q, Rational(0), q);
  rects.emplace_back(1 - q, Rational(1), Rational(0), q);
  rects.emplace_back(Rational(0), q, 1 - q, Rational(1));
  rects.emplace_back(1 - q, Rational(1), 1 - q, Rational(1));
  return RectUnion(std::move(rects));
}

Rational example_c_little_edge(int d) {
  if (d < 5) throw std::invalid_argument("grid parameter d must be at least 5");
  return make_rational(d - 4, d) / ((d + 1) * (d + 1) - 16);
}

namespace {

bool corner_grid_index(int i, int d) { return i <= 1 || i >= d - 1; }

// x-interval of the grid square of edge `edge` anchored at grid line i/d,
// pushed inside [0, 1] at the boundary.
std::pair<Rational, Rational> grid_square_interval(int i, int d, const Rational& edge) {
  Rational lo = make_rational(i, d) - edge / 2;
  if (lo < 0) lo = 0;
  if (lo > 1 - edge) lo = 1 - edge;
  return {lo, lo + edge};
}

void append_corner_squares(std::vector<Rect>& rects, int d) {
  Rational e = make_rational(1, d);
  rects.emplace_back(Rational(0), e, Rational(0), e);
  rects.emplace_back(1 - e, Rational(1), Rational(0), e);
  rects.emplace_back(Rational(0), e, 1 - e, Rational(1));
  rects.emplace_back(1 - e, Rational(1), 1 - e, Rational(1));
}

}  // namespace

RectUnion generate_example_C(int d) {
  Rational eps = example_c_little_edge(d);
  std::vector<Rect> rects;
  append_corner_squares(rects, d);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (corner_grid_index(i, d) && corner_grid_index(j, d)) continue;
      auto [x0, x1] = grid_square_interval(i, d, eps);
      auto [y0, y1] = grid_square_interval(j, d, eps);
      rects.emplace_back(std::move(x0), std::move(x1), std::move(y0), std::move(y1));
    }
  }
  return RectUnion(std::move(rects));
}

RectUnion generate_example_E(int d, const Rational& eps, const Rational& center_edge) {
  Rational eps_max = example_c_little_edge(d);
  if (!(eps > 0 && eps < eps_max))
    throw std::invalid_argument("eps must lie in (0, " + format_rational(eps_max) +
                                "), the example-C little edge for d = " + std::to_string(d));
  if (!(center_edge > 0 && center_edge < 1 - make_rational(2, d)))
    throw std::invalid_argument(
        "center edge must lie in (0, 1 - 2/d) to stay inside the unit square and clear of "
        "the corner squares");

  Rational margin = (1 - center_edge) / 2;
  Rational center_hi = 1 - margin;

  // Per-axis classification of the grid squares against the center square:
  // each must be wholly inside or strictly outside.
  enum class Side { Inside, Outside };
  std::vector<Side> side(static_cast<std::size_t>(d) + 1, Side::Outside);
  for (int i = 0; i <= d; ++i) {
    auto [lo, hi] = grid_square_interval(i, d, eps);
    if (hi < margin || lo > center_hi) {
      side[static_cast<std::size_t>(i)] = Side::Outside;
    } else if (lo >= margin && hi <= center_hi) {
      side[static_cast<std::size_t>(i)] = Side::Inside;
    } else {
      throw std::invalid_argument(
          "center square boundary cuts through the grid square at index " + std::to_string(i) +
          "; it must swallow whole grid squares only");
    }
  }

  std::vector<Rect> rects;
  append_corner_squares(rects, d);
  rects.emplace_back(margin, center_hi, margin, center_hi);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (corner_grid_index(i, d) && corner_grid_index(j, d)) continue;
      if (side[static_cast<std::size_t>(i)] == Side::Inside &&
          side[static_cast<std::size_t>(j)] == Side::Inside)
        continue;  // swallowed by the center square
      auto [x0, x1] = grid_square_interval(i, d, eps);
      auto [y0, y1] = grid_square_interval(j, d, eps);
      rects.emplace_back(std::move(x0), std::move(x1), std::move(y0), std::move(y1));
    }
  }
  return RectUnion(std::move(rects));
}

std::optional<ExampleEParams> search_example_E_parameters(int d) {
  std::vector<Rational> candidates;
  Rational eps = example_c_little_edge(d);
  for (int k = 0; k < 16; ++k) {
    eps /= 2;
    candidates.push_back(eps);
  }
  return search_example_E_parameters(d, candidates);
}

std::optional<ExampleEParams> search_example_E_parameters(
    int d, const std::vector<Rational>& eps_candidates) {
  Rational eps_max = example_c_little_edge(d);
  int little_total = (d + 1) * (d + 1) - 16;
  Rational corners_area = make_rational(4, d) / d;

  for (const Rational& eps : eps_candidates) {
    if (!(eps > 0 && eps < eps_max)) continue;
    for (int kept = 0; kept <= little_total; ++kept) {
      // The profile balances only when the component edges sum to 1, which
      // pins the center edge for a given kept-square count.
      Rational c = 1 - make_rational(4, d) - eps * kept;
      if (!(c > 0)) break;
      // Cheap volume pre-check before building anything.
      Rational area_guess = corners_area + eps * eps * kept + c * c;
      Rational db_area = 4;
      if (area_guess < db_area / 6 || area_guess > db_area / 4) continue;
      RectUnion e;
      try {
        e = generate_example_E(d, eps, c);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (area(e) != area_guess) continue;  // kept-count guess was wrong
      if (segment_profile(e, Direction(1, 0)).chord_defect() != 0) continue;
      if (is_convex_region(e)) continue;
      ConvexityReport report = run_battery(e);
      if (report.overall == Overall::Inconclusive)
        return ExampleEParams{d, eps, c};
    }
  }
  return std::nullopt;
}

}  // namespace covagram
