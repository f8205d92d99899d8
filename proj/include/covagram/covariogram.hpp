#pragma once

#include "covagram/lattice.hpp"
#include "covagram/rational.hpp"
#include "covagram/region.hpp"

namespace covagram {

// Covariogram of the unit square [0,1]^2:
// max(0, 1-|x|) * max(0, 1-|y|), exactly.
Rational unit_square_covariogram(const RatPoint& x);

// g_R(x) = area(R intersect (R + x)). Symmetric in x; equals area(R) at 0.
Rational region_covariogram(const RectUnion& r, const RatPoint& x);

// The region p + [0,1]^2 associated with a polyomino.
RectUnion animal_region(const Polyomino& p);

// Covariogram of the animal of a polyomino, evaluated through the discrete
// difference multiset: sum over integer z of multiplicity(z) * g_Q(z + x).
// At most four integer z contribute for any x. Equals the region route on
// animal_region(p) exactly. Precomputes the multiset once; cheap to reuse
// for grid sampling.
class AnimalCovariogram {
 public:
  explicit AnimalCovariogram(Polyomino p);

  const Polyomino& polyomino() const { return polyomino_; }
  const DifferenceMultiset& multiset() const { return multiset_; }
  Rational operator()(const RatPoint& x) const;

 private:
  Polyomino polyomino_;
  DifferenceMultiset multiset_;
};

Rational animal_covariogram(const Polyomino& p, const RatPoint& x);

// The support of g_R is exactly the difference set of R.
RectUnion support_of_covariogram(const RectUnion& r);

struct DerivativeAtZero {
  Direction direction;
  Rational value_scaled;  // ||(p,q)|| times the one-sided derivative -dg/du(0)
  bool finite = true;     // rectangle unions always have finite sections
};

// Computed symbolically as the integral of the chord-count profile, never by
// numerical differencing.
DerivativeAtZero derivative_at_zero(const RectUnion& r, const Direction& d);

}  // namespace covagram
