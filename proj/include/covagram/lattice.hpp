#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace covagram {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
inline LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
inline LatticePoint operator-(LatticePoint a) { return {-a.x, -a.y}; }

// The eight linear isometries of the square lattice (signed coordinate
// permutations), indexed 0..7. Index 0 is the identity.
inline constexpr int kSquareIsometryCount = 8;
LatticePoint apply_square_isometry(LatticePoint p, int k);
bool square_isometry_is_reflection(int k);  // determinant -1

struct LatticeBox {
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

// Finite non-empty set of lattice points. Points are kept sorted
// lexicographically by (x, y) and duplicate-free, so iteration order and
// serialization are deterministic.
class LatticeSet {
 public:
  explicit LatticeSet(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(LatticePoint p) const;
  LatticePoint min_point() const { return points_.front(); }
  LatticeBox bounding_box() const;

  LatticeSet translated(LatticePoint v) const;
  LatticeSet negated() const;
  LatticeSet transformed(int isometry) const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  std::vector<LatticePoint> points_;
};

enum class SymmetryGroup {
  TranslationOnly,
  TranslationPointReflection,
  FullSquareIsometry,
};

// Multiset of pairwise vector differences of a lattice set: the discrete
// covariogram. Entries are sorted by vector; every multiplicity is positive.
class DifferenceMultiset {
 public:
  using Entry = std::pair<LatticePoint, std::int64_t>;

  explicit DifferenceMultiset(std::vector<Entry> sorted_entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::int64_t multiplicity(LatticePoint v) const;
  std::int64_t total_count() const;

  DifferenceMultiset transformed(int isometry) const;

  // Flat (dx, dy, multiplicity) triples; equal multisets have equal keys.
  std::vector<std::int64_t> key() const;
  // Least key over the eight square isometries applied to the vectors.
  std::vector<std::int64_t> canonical_key() const;

  friend bool operator==(const DifferenceMultiset&, const DifferenceMultiset&) = default;

 private:
  std::vector<Entry> entries_;
};

// A lattice set whose unit-cell union has connected interior (4-adjacency of
// cells). The constructor rejects disconnected input.
class Polyomino {
 public:
  explicit Polyomino(LatticeSet cells);

  const LatticeSet& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  friend bool operator==(const Polyomino&, const Polyomino&) = default;

 private:
  LatticeSet cells_;
};

DifferenceMultiset difference_multiset(const LatticeSet& a);
bool homometric(const LatticeSet& a, const LatticeSet& b);

// True when the 4-adjacency graph on the cells is connected. Breadth-first
// traversal from the lexicographically least point.
bool is_connected_animal(const LatticeSet& a);

// Distinguished orbit representative of `a` under `group`: the set is
// translated so its lexicographic minimum is the origin, and for the richer
// groups the lexicographically least point sequence among all group images
// is chosen. Equal canonical forms <=> same orbit.
LatticeSet canonical_form(const LatticeSet& a, SymmetryGroup group);
bool congruent(const LatticeSet& a, const LatticeSet& b, SymmetryGroup group);

// (height, basis) of the minimal axis-aligned cell container:
// (max_y - min_y + 1, max_x - min_x + 1).
std::pair<std::int64_t, std::int64_t> bounding_box_class(const Polyomino& p);

// (A+B, A-B). Requires every point of A+B (resp. A-B) to have a unique
// representation a+b (resp. a-b); otherwise throws std::invalid_argument
// naming the colliding value. The two outputs are homometric.
std::pair<LatticeSet, LatticeSet> sum_diff_construction(const LatticeSet& a,
                                                        const LatticeSet& b);

inline constexpr int kMaxEnumerationCells = 12;

// One representative per orbit of d-cell polyominoes under `group`, sorted
// by point sequence. Throws std::invalid_argument when d is out of
// [1, kMaxEnumerationCells].
std::vector<Polyomino> enumerate_polyominoes(int d, SymmetryGroup group);

// Visits every fixed (translation-class) d-cell polyomino exactly once,
// translated so its lexicographically least cell is the origin. Enumeration
// order is deterministic but unspecified.
void visit_fixed_polyominoes(int d, const std::function<void(const LatticeSet&)>& visit);

enum class PairCongruence {
  None,            // no plane isometry maps one onto the other
  LineReflection,  // congruent via a reflection in a line (plus translation)
  RotationOnly,    // congruent only via a quarter-turn rotation
};

struct HomometricPair {
  Polyomino first;
  Polyomino second;
  DifferenceMultiset multiset;
  PairCongruence congruence;
};

// All homometric pairs of d-cell polyominoes that are not congruent under
// translations and point reflections, one representative per simultaneous
// square-isometry class of pairs, deterministically ordered. Pairs are found
// by grouping on a canonical multiset serialization, never by an all-pairs
// scan.
std::vector<HomometricPair> search_homometric_pairs(int d);

}  // namespace covagram
