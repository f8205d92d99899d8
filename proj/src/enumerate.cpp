#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "covagram/lattice.hpp"
#include "parallel.hpp"

namespace covagram {

namespace {

// Fixed-polyomino growth enumeration over the half-plane
// {y > 0} u {y == 0, x >= 0}: every translation class is produced exactly
// once, anchored so that its least cell in (y, x) order is the origin.
class FixedEnumerator {
 public:
  FixedEnumerator(int d, const std::function<void(const LatticeSet&)>& visit)
      : d_(d), width_(2 * d - 1), visit_(visit),
        seen_(static_cast<std::size_t>(width_) * d, false) {}

  void run() {
    std::vector<int> untried{index(0, 0)};
    seen_[static_cast<std::size_t>(index(0, 0))] = true;
    extend(untried, 0);
  }

 private:
  int index(int x, int y) const { return y * width_ + (x + d_ - 1); }
  int cell_x(int idx) const { return idx % width_ - (d_ - 1); }
  int cell_y(int idx) const { return idx / width_; }

  bool allowed(int x, int y) const {
    if (x <= -d_ || x >= d_ || y < 0 || y >= d_) return false;
    return y > 0 || x >= 0;
  }

  void extend(std::vector<int>& untried, int size) {
    std::vector<int> removed;
    while (!untried.empty()) {
      int cell = untried.back();
      untried.pop_back();
      removed.push_back(cell);
      current_.push_back(cell);
      if (size + 1 == d_) {
        emit();
      } else {
        std::size_t base = untried.size();
        int x = cell_x(cell), y = cell_y(cell);
        const int nbs[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
        for (const auto& nb : nbs) {
          if (!allowed(nb[0], nb[1])) continue;
          int ni = index(nb[0], nb[1]);
          if (seen_[static_cast<std::size_t>(ni)]) continue;
          seen_[static_cast<std::size_t>(ni)] = true;
          untried.push_back(ni);
        }
        extend(untried, size + 1);
        while (untried.size() > base) {
          seen_[static_cast<std::size_t>(untried.back())] = false;
          untried.pop_back();
        }
      }
      current_.pop_back();
    }
    // Restore the caller's untried list; the removed cells stay seen because
    // an ancestor frame discovered them.
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) untried.push_back(*it);
  }

  void emit() {
    std::vector<LatticePoint> pts;
    pts.reserve(current_.size());
    for (int idx : current_)
      pts.push_back({cell_x(idx), cell_y(idx)});
    LatticeSet set(std::move(pts));
    visit_(set.translated(-set.min_point()));
  }

  int d_;
  int width_;
  const std::function<void(const LatticeSet&)>& visit_;
  std::vector<bool> seen_;
  std::vector<int> current_;
};

void check_cell_count(int d) {
  if (d < 1 || d > kMaxEnumerationCells)
    throw std::invalid_argument("cell count must be in [1, " +
                                std::to_string(kMaxEnumerationCells) + "]");
}

struct Int64VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<std::int64_t> flatten(const LatticeSet& s) {
  std::vector<std::int64_t> flat;
  flat.reserve(s.size() * 2);
  for (const auto& p : s.points()) {
    flat.push_back(p.x);
    flat.push_back(p.y);
  }
  return flat;
}

// Key identifying the orbit of the unordered pair {a, b} under simultaneous
// square isometries (composed with per-member translations / reflections).
std::vector<std::int64_t> pair_orbit_key(const LatticeSet& a, const LatticeSet& b) {
  std::vector<std::int64_t> best;
  for (int k = 0; k < kSquareIsometryCount; ++k) {
    std::vector<std::int64_t> fa =
        flatten(canonical_form(a.transformed(k), SymmetryGroup::TranslationPointReflection));
    std::vector<std::int64_t> fb =
        flatten(canonical_form(b.transformed(k), SymmetryGroup::TranslationPointReflection));
    if (fb < fa) fa.swap(fb);
    fa.push_back(INT64_MIN);  // separator
    fa.insert(fa.end(), fb.begin(), fb.end());
    if (best.empty() || fa < best) best = std::move(fa);
  }
  return best;
}

PairCongruence classify_pair_congruence(const LatticeSet& a, const LatticeSet& b) {
  bool reflection = false;
  bool rotation = false;
  LatticeSet cb = canonical_form(b, SymmetryGroup::TranslationPointReflection);
  for (int k = 1; k < kSquareIsometryCount; ++k) {
    if (canonical_form(a.transformed(k), SymmetryGroup::TranslationPointReflection) == cb) {
      if (square_isometry_is_reflection(k))
        reflection = true;
      else
        rotation = true;
    }
  }
  if (reflection) return PairCongruence::LineReflection;
  if (rotation) return PairCongruence::RotationOnly;
  return PairCongruence::None;
}

}  // namespace

void visit_fixed_polyominoes(int d, const std::function<void(const LatticeSet&)>& visit) {
  check_cell_count(d);
  FixedEnumerator(d, visit).run();
}

std::vector<Polyomino> enumerate_polyominoes(int d, SymmetryGroup group) {
  check_cell_count(d);
  std::vector<LatticeSet> fixed;
  visit_fixed_polyominoes(d, [&](const LatticeSet& s) { fixed.push_back(s); });

  // One representative per orbit: keep exactly the fixed polyominoes that
  // coincide with their own canonical form under the group.
  std::vector<char> keep(fixed.size(), 0);
  detail::parallel_chunks(fixed.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      keep[i] = canonical_form(fixed[i], group) == fixed[i] ? 1 : 0;
  });

  std::vector<Polyomino> result;
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (keep[i]) result.emplace_back(fixed[i]);
  std::sort(result.begin(), result.end(), [](const Polyomino& a, const Polyomino& b) {
    return a.cells().points() < b.cells().points();
  });
  return result;
}

std::vector<HomometricPair> search_homometric_pairs(int d) {
  check_cell_count(d);
  std::vector<Polyomino> reps =
      enumerate_polyominoes(d, SymmetryGroup::TranslationPointReflection);

  struct Keys {
    std::vector<std::int64_t> raw;
    std::vector<std::int64_t> canonical;
  };
  std::vector<Keys> keys(reps.size());
  detail::parallel_chunks(reps.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      DifferenceMultiset dm = difference_multiset(reps[i].cells());
      keys[i].raw = dm.key();
      keys[i].canonical = dm.canonical_key();
    }
  });

  // Group representatives by the canonical multiset key, then split each
  // group by the raw multiset: members sharing a raw key are homometric and,
  // being distinct orbit representatives, never congruent under translations
  // and point reflections.
  std::unordered_map<std::vector<std::int64_t>, std::vector<std::size_t>, Int64VecHash> groups;
  for (std::size_t i = 0; i < reps.size(); ++i) groups[keys[i].canonical].push_back(i);

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (auto& [ckey, members] : groups) {
    if (members.size() < 2) continue;
    std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_raw;
    for (std::size_t i : members) by_raw[keys[i].raw].push_back(i);
    for (auto& [rkey, same] : by_raw) {
      for (std::size_t i = 0; i < same.size(); ++i)
        for (std::size_t j = i + 1; j < same.size(); ++j)
          candidates.emplace_back(std::min(same[i], same[j]), std::max(same[i], same[j]));
    }
  }
  std::sort(candidates.begin(), candidates.end());

  // Collapse pairs that are simultaneous square-isometry images of each
  // other; the first candidate in sorted order represents its class.
  std::map<std::vector<std::int64_t>, std::pair<std::size_t, std::size_t>> classes;
  for (const auto& cand : candidates)
    classes.try_emplace(pair_orbit_key(reps[cand.first].cells(), reps[cand.second].cells()),
                        cand);

  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  for (const auto& [key, cand] : classes) chosen.push_back(cand);
  std::sort(chosen.begin(), chosen.end());

  std::vector<HomometricPair> pairs;
  pairs.reserve(chosen.size());
  for (const auto& [i, j] : chosen) {
    pairs.push_back(HomometricPair{
        reps[i], reps[j], difference_multiset(reps[i].cells()),
        classify_pair_congruence(reps[i].cells(), reps[j].cells())});
  }
  return pairs;
}

}  // namespace covagram
