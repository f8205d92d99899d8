#include <doctest.h>

#include "covagram/convexity.hpp"
#include "covagram/covariogram.hpp"
#include "support.hpp"

using namespace covagram;
using namespace covagram::testsupport;

namespace {

// Frozen parameters for the all-tests-pass non-convex region, found by
// search_example_E_parameters(22).
ExampleEParams frozen_e() { return {22, make_rational(1, 40128), make_rational(1019, 1254)}; }

bool verdicts_equal(const ConvexityReport& a, const ConvexityReport& b) {
  if (a.support_convex.verdict != b.support_convex.verdict) return false;
  if (a.diffbody_equals_hull_diffbody.verdict != b.diffbody_equals_hull_diffbody.verdict)
    return false;
  if (a.rogers_shephard_bm.verdict != b.rogers_shephard_bm.verdict) return false;
  if (a.derivative_width.size() != b.derivative_width.size()) return false;
  for (std::size_t i = 0; i < a.derivative_width.size(); ++i) {
    if (a.derivative_width[i].verdict != b.derivative_width[i].verdict) return false;
    if (a.chord_condition_hp[i].verdict != b.chord_condition_hp[i].verdict) return false;
    if (a.projection_bounds[i].verdict != b.projection_bounds[i].verdict) return false;
  }
  return a.overall == b.overall;
}

}  // namespace

TEST_CASE("a unit square passes the whole battery") {
  RectUnion square({Rect(Rational(0), Rational(1), Rational(0), Rational(1))});
  ConvexityReport report = run_battery(square);
  CHECK(report.overall == Overall::Inconclusive);
  CHECK_FALSE(report.any_failure());
  CHECK(report.rogers_shephard_bm.lower_bound == make_rational(2, 3));
  CHECK(report.rogers_shephard_bm.upper_bound == 1);
}

TEST_CASE("battery preconditions") {
  CHECK_THROWS_AS(run_battery(RectUnion()), std::invalid_argument);
  RectUnion square({Rect(Rational(0), Rational(1), Rational(0), Rational(1))});
  CHECK_THROWS_AS(run_battery(square, {}), std::invalid_argument);
}

TEST_CASE("example B: four corner squares") {
  RectUnion b = generate_example_B();
  CHECK(area(b) == make_rational(1, 4));
  CHECK(convex_hull(b).area() == 1);

  RectUnion db = difference_body(b);
  CHECK_FALSE(is_convex_region(db));
  CHECK(area(db) == make_rational(9, 4));

  ConvexityReport report = run_battery(b);
  CHECK(report.support_convex.verdict == Verdict::Fail);
  CHECK(report.diffbody_equals_hull_diffbody.verdict == Verdict::Fail);
  // frozen regression constant computed by the engine on first build
  CHECK(report.diffbody_equals_hull_diffbody.symmetric_difference_area == make_rational(7, 4));
  CHECK(report.support_convex.hull_excess_area == make_rational(7, 4));
  for (const auto& row : report.chord_condition_hp) CHECK(row.verdict == Verdict::Pass);
  for (const auto& row : report.derivative_width) CHECK(row.verdict == Verdict::Pass);
  CHECK(report.rogers_shephard_bm.verdict == Verdict::Fail);
  CHECK(report.rogers_shephard_bm.covariogram_at_zero == make_rational(1, 4));
  CHECK(report.rogers_shephard_bm.lower_bound == make_rational(3, 8));
  CHECK(report.overall == Overall::DisprovedConvexity);
}

TEST_CASE("example B chord profile along the x-axis") {
  SegmentProfile profile = segment_profile(generate_example_B(), Direction(1, 0));
  REQUIRE(profile.bands.size() == 3);
  CHECK(profile.bands[0].t_lo == 0);
  CHECK(profile.bands[0].t_hi == make_rational(1, 4));
  CHECK(profile.bands[0].segment_count == 2);
  CHECK(profile.bands[1].t_hi == make_rational(3, 4));
  CHECK(profile.bands[1].segment_count == 0);
  CHECK(profile.bands[2].t_hi == 1);
  CHECK(profile.bands[2].segment_count == 2);
}

TEST_CASE("example C at d = 10") {
  CHECK_THROWS_AS(generate_example_C(4), std::invalid_argument);
  CHECK(example_c_little_edge(10) == make_rational(3, 525));

  RectUnion c = generate_example_C(10);
  // area = 4/100 + 105 * (3/525)^2
  Rational expected_area = make_rational(4, 100) +
                           105 * make_rational(3, 525) * make_rational(3, 525);
  CHECK(expected_area == make_rational(38, 875));
  CHECK(area(c) == expected_area);

  RectUnion dc = difference_body(c);
  RectUnion full_square({Rect(Rational(-1), Rational(1), Rational(-1), Rational(1))});
  CHECK(dc == full_square);
  CHECK(is_convex_region(dc));

  ConvexityReport report = run_battery(c);
  CHECK(report.support_convex.verdict == Verdict::Pass);
  CHECK(report.diffbody_equals_hull_diffbody.verdict == Verdict::Pass);
  for (const auto& row : report.chord_condition_hp) CHECK(row.verdict == Verdict::Pass);
  for (const auto& row : report.derivative_width) CHECK(row.verdict == Verdict::Pass);
  CHECK(report.rogers_shephard_bm.verdict == Verdict::Fail);
  CHECK(report.rogers_shephard_bm.lower_bound == make_rational(2, 3));
  CHECK(report.rogers_shephard_bm.lower_bound > report.rogers_shephard_bm.covariogram_at_zero);
  CHECK(report.overall == Overall::DisprovedConvexity);
}

TEST_CASE("example E parameter validation") {
  Rational eps = make_rational(1, 40128);
  CHECK_THROWS_AS(generate_example_E(22, Rational(1), make_rational(1019, 1254)),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_example_E(22, Rational(0), make_rational(1019, 1254)),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_example_E(22, eps, Rational(1)), std::invalid_argument);
  // boundary through a grid square: margin lands inside the square at index 2
  CHECK_THROWS_AS(generate_example_E(22, eps, 1 - make_rational(2 * 2, 22)),
                  std::invalid_argument);
}

TEST_CASE("example E: every test passes yet the region is not convex") {
  ExampleEParams params = frozen_e();
  RectUnion e = generate_example_E(params.d, params.eps, params.center_edge);
  CHECK_FALSE(is_convex_region(e));

  RectUnion de = difference_body(e);
  RectUnion full_square({Rect(Rational(-1), Rational(1), Rational(-1), Rational(1))});
  CHECK(de == full_square);

  ConvexityReport report = run_battery(e);
  CHECK(report.overall == Overall::Inconclusive);
  CHECK_FALSE(report.any_failure());
  // the profile balances exactly along the axes
  CHECK(report.chord_condition_hp[0].value == 0);
  CHECK(report.chord_condition_hp[1].value == 0);
}

TEST_CASE("the example E parameter search recovers the frozen triple") {
  auto found = search_example_E_parameters(22);
  REQUIRE(found.has_value());
  ExampleEParams expected = frozen_e();
  CHECK(found->d == expected.d);
  CHECK(found->eps == expected.eps);
  CHECK(found->center_edge == expected.center_edge);
}

TEST_CASE("battery soundness on random convex regions") {
  Rng rng(131);
  for (int trial = 0; trial < 50; ++trial) {
    RectUnion r = rand_convex_union(rng);
    ConvexityReport report = run_battery(r);
    CHECK(report.overall == Overall::Inconclusive);
    CHECK_FALSE(report.any_failure());
  }
}

TEST_CASE("chord condition equals derivative minus half width") {
  Rng rng(137);
  for (int trial = 0; trial < 40; ++trial) {
    RectUnion r = rand_rect_union(rng, 4);
    ConvexityReport report = run_battery(r);
    for (std::size_t i = 0; i < report.derivative_width.size(); ++i) {
      const auto& dw = report.derivative_width[i];
      const auto& cc = report.chord_condition_hp[i];
      CHECK(cc.value == dw.derivative_scaled - dw.half_width_scaled);
      CHECK((cc.verdict == Verdict::Pass) == (dw.verdict == Verdict::Pass));
      const auto& pb = report.projection_bounds[i];
      CHECK((pb.verdict == Verdict::Pass) == (dw.verdict == Verdict::Pass));
    }
  }
}

TEST_CASE("battery verdicts are invariant under translation and point reflection") {
  Rng rng(139);
  for (int trial = 0; trial < 12; ++trial) {
    RectUnion r = rand_rect_union(rng, 4);
    ConvexityReport base = run_battery(r);
    RatPoint v{rand_rational(rng, 4, 5), rand_rational(rng, 4, 5)};
    CHECK(verdicts_equal(base, run_battery(translate(r, v))));
    CHECK(verdicts_equal(base, run_battery(point_reflected(r))));
  }
  ConvexityReport b = run_battery(generate_example_B());
  CHECK(verdicts_equal(
      b, run_battery(translate(generate_example_B(), {make_rational(3, 7), Rational(-2)}))));
  CHECK(verdicts_equal(b, run_battery(point_reflected(generate_example_B()))));
}
