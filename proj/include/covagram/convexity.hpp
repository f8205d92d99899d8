#pragma once

#include <optional>
#include <vector>

#include "covagram/rational.hpp"
#include "covagram/region.hpp"

namespace covagram {

enum class Verdict { Pass, Fail };

// A battery of exact necessary conditions that the covariogram of R must
// satisfy if it is to coincide with the covariogram of some convex body.
// Every verdict is an exact rational comparison; a Fail disproves convexity
// of any body sharing g_R, while all-Pass is merely inconclusive.

struct SupportConvexResult {
  Verdict verdict = Verdict::Pass;
  Rational hull_excess_area;  // area(conv(DR)) - area(DR); positive on failure
};

struct DiffBodyResult {
  Verdict verdict = Verdict::Pass;
  Rational symmetric_difference_area;  // area(D(conv R)) - area(DR), exact
};

struct DerivativeWidthResult {
  Direction direction;
  Verdict verdict = Verdict::Pass;
  Rational derivative_scaled;  // ||(p,q)|| * (-dg/du)(0)
  Rational half_width_scaled;  // (1/2) * width_scaled(DR, perp)
};

struct ChordConditionResult {
  Direction direction;
  Verdict verdict = Verdict::Pass;
  Rational value;  // sum over i of (i-1) * measure{t : N(t) = i}; fail iff != 0
};

struct VolumeBoundsResult {
  Verdict verdict = Verdict::Pass;
  Rational covariogram_at_zero;  // g(0) = area(R)
  Rational lower_bound;          // area(DR) / 6
  Rational upper_bound;          // area(DR) / 4
};

struct ProjectionBoundsResult {
  Direction direction;
  Verdict verdict = Verdict::Pass;
  Rational derivative_scaled;
  Rational lower_bound;  // both constants equal 1/2 in the plane, so the
  Rational upper_bound;  // bracket degenerates to an equality
};

enum class Overall { DisprovedConvexity, Inconclusive };

struct ConvexityReport {
  SupportConvexResult support_convex;
  DiffBodyResult diffbody_equals_hull_diffbody;
  std::vector<DerivativeWidthResult> derivative_width;
  std::vector<ChordConditionResult> chord_condition_hp;
  VolumeBoundsResult rogers_shephard_bm;
  std::vector<ProjectionBoundsResult> projection_bounds;
  Overall overall = Overall::Inconclusive;

  bool any_failure() const;
};

// Axes plus four diagonal primitives. Any finite direction set is a sample
// of the full circle; callers may extend it.
std::vector<Direction> default_directions();

ConvexityReport run_battery(const RectUnion& r, const std::vector<Direction>& directions);
ConvexityReport run_battery(const RectUnion& r);

// Four squares of edge 1/4 in the corners of the unit square. Its convex
// hull is the unit square while its difference set is neither the full
// square [-1,1]^2 nor convex.
RectUnion generate_example_B();

// Four corner squares of edge 1/d in the unit square plus (d+1)^2 - 16
// squares of edge (1 - 4/d)/((d+1)^2 - 16), one per remaining grid point
// (i/d, j/d), kept inside the unit square. Its difference set is exactly
// [-1,1]^2, yet the volume bounds fail once d is large. Requires d >= 5.
RectUnion generate_example_C(int d);

Rational example_c_little_edge(int d);  // (1 - 4/d)/((d+1)^2 - 16)

// Example C with little squares of edge eps < example_c_little_edge(d) and a
// centered square of edge center_edge added. The center square must stay
// inside the unit square, clear of the corner squares, and must swallow
// whole little squares only: its boundary may not cut through any kept grid
// square. Violations throw std::invalid_argument naming the bound.
RectUnion generate_example_E(int d, const Rational& eps, const Rational& center_edge);

struct ExampleEParams {
  int d = 0;
  Rational eps;
  Rational center_edge;
};

// Scans center edges c = 1 - 4/d - k*eps (k = 0, 1, ...) for each candidate
// eps, keeping only placements whose swallow count balances the profile, and
// returns the first triple whose battery passes every test while the region
// itself is non-convex. Candidate eps default to halvings of the example-C
// edge.
std::optional<ExampleEParams> search_example_E_parameters(int d);
std::optional<ExampleEParams> search_example_E_parameters(
    int d, const std::vector<Rational>& eps_candidates);

}  // namespace covagram
