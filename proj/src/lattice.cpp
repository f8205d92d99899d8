#include "covagram/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace covagram {

namespace {

std::string point_str(LatticePoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

LatticePoint apply_square_isometry(LatticePoint p, int k) {
  if (k & 4) std::swap(p.x, p.y);
  if (k & 1) p.x = -p.x;
  if (k & 2) p.y = -p.y;
  return p;
}

bool square_isometry_is_reflection(int k) {
  // det of diag(sx, sy) is sx*sy; the swap contributes another factor -1.
  int det = ((k & 1) ? -1 : 1) * ((k & 2) ? -1 : 1) * ((k & 4) ? -1 : 1);
  return det == -1;
}

LatticeSet::LatticeSet(std::vector<LatticePoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  if (points_.empty()) throw std::invalid_argument("lattice set must be non-empty");
}

bool LatticeSet::contains(LatticePoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

LatticeBox LatticeSet::bounding_box() const {
  LatticeBox box{points_.front().x, points_.front().x, points_.front().y, points_.front().y};
  for (const auto& p : points_) {
    box.min_x = std::min(box.min_x, p.x);
    box.max_x = std::max(box.max_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

LatticeSet LatticeSet::translated(LatticePoint v) const {
  std::vector<LatticePoint> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back(p + v);
  return LatticeSet(std::move(pts));
}

LatticeSet LatticeSet::negated() const { return transformed(3); }

LatticeSet LatticeSet::transformed(int isometry) const {
  std::vector<LatticePoint> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back(apply_square_isometry(p, isometry));
  return LatticeSet(std::move(pts));
}

DifferenceMultiset::DifferenceMultiset(std::vector<Entry> sorted_entries)
    : entries_(std::move(sorted_entries)) {}

std::int64_t DifferenceMultiset::multiplicity(LatticePoint v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, LatticePoint p) { return e.first < p; });
  if (it == entries_.end() || it->first != v) return 0;
  return it->second;
}

std::int64_t DifferenceMultiset::total_count() const {
  std::int64_t total = 0;
  for (const auto& [v, m] : entries_) total += m;
  return total;
}

DifferenceMultiset DifferenceMultiset::transformed(int isometry) const {
  std::vector<Entry> entries;
  entries.reserve(entries_.size());
  for (const auto& [v, m] : entries_) entries.emplace_back(apply_square_isometry(v, isometry), m);
  std::sort(entries.begin(), entries.end());
  return DifferenceMultiset(std::move(entries));
}

std::vector<std::int64_t> DifferenceMultiset::key() const {
  std::vector<std::int64_t> flat;
  flat.reserve(entries_.size() * 3);
  for (const auto& [v, m] : entries_) {
    flat.push_back(v.x);
    flat.push_back(v.y);
    flat.push_back(m);
  }
  return flat;
}

std::vector<std::int64_t> DifferenceMultiset::canonical_key() const {
  std::vector<std::int64_t> best;
  for (int k = 0; k < kSquareIsometryCount; ++k) {
    std::vector<std::int64_t> candidate = transformed(k).key();
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

Polyomino::Polyomino(LatticeSet cells) : cells_(std::move(cells)) {
  if (!is_connected_animal(cells_))
    throw std::invalid_argument("cell set is not a polyomino: interior is disconnected");
}

DifferenceMultiset difference_multiset(const LatticeSet& a) {
  std::map<LatticePoint, std::int64_t> counts;
  for (const auto& p : a.points())
    for (const auto& q : a.points()) ++counts[p - q];
  std::vector<DifferenceMultiset::Entry> entries(counts.begin(), counts.end());
  return DifferenceMultiset(std::move(entries));
}

bool homometric(const LatticeSet& a, const LatticeSet& b) {
  return difference_multiset(a) == difference_multiset(b);
}

bool is_connected_animal(const LatticeSet& a) {
  const auto& pts = a.points();
  std::vector<LatticePoint> frontier{pts.front()};
  std::vector<bool> seen(pts.size(), false);
  seen[0] = true;
  std::size_t reached = 1;
  auto index_of = [&](LatticePoint p) -> std::ptrdiff_t {
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p) return -1;
    return it - pts.begin();
  };
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    LatticePoint p = frontier[head];
    const LatticePoint nbs[4] = {{p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
    for (const auto& nb : nbs) {
      std::ptrdiff_t i = index_of(nb);
      if (i >= 0 && !seen[i]) {
        seen[i] = true;
        ++reached;
        frontier.push_back(nb);
      }
    }
  }
  return reached == pts.size();
}

namespace {

LatticeSet translated_to_origin(const LatticeSet& a) {
  return a.translated(-a.min_point());
}

}  // namespace

LatticeSet canonical_form(const LatticeSet& a, SymmetryGroup group) {
  LatticeSet best = translated_to_origin(a);
  auto consider = [&](const LatticeSet& image) {
    LatticeSet cand = translated_to_origin(image);
    if (cand.points() < best.points()) best = std::move(cand);
  };
  switch (group) {
    case SymmetryGroup::TranslationOnly:
      break;
    case SymmetryGroup::TranslationPointReflection:
      consider(a.negated());
      break;
    case SymmetryGroup::FullSquareIsometry:
      for (int k = 1; k < kSquareIsometryCount; ++k) consider(a.transformed(k));
      break;
  }
  return best;
}

bool congruent(const LatticeSet& a, const LatticeSet& b, SymmetryGroup group) {
  return canonical_form(a, group) == canonical_form(b, group);
}

std::pair<std::int64_t, std::int64_t> bounding_box_class(const Polyomino& p) {
  LatticeBox box = p.cells().bounding_box();
  return {box.max_y - box.min_y + 1, box.max_x - box.min_x + 1};
}

std::pair<LatticeSet, LatticeSet> sum_diff_construction(const LatticeSet& a,
                                                        const LatticeSet& b) {
  auto combine = [&](int sign, const char* label) {
    std::map<LatticePoint, std::pair<LatticePoint, LatticePoint>> seen;
    for (const auto& p : a.points()) {
      for (const auto& q : b.points()) {
        LatticePoint r = sign > 0 ? p + q : p - q;
        auto [it, inserted] = seen.emplace(r, std::make_pair(p, q));
        if (!inserted) {
          const auto& [p0, q0] = it->second;
          char op = sign > 0 ? '+' : '-';
          throw std::invalid_argument(
              std::string(label) + " collision: " + point_str(r) + " = " + point_str(p0) +
              op + point_str(q0) + " = " + point_str(p) + op + point_str(q));
        }
      }
    }
    std::vector<LatticePoint> pts;
    pts.reserve(seen.size());
    for (const auto& [r, rep] : seen) pts.push_back(r);
    return LatticeSet(std::move(pts));
  };
  LatticeSet sum = combine(+1, "A+B");
  LatticeSet diff = combine(-1, "A-B");
  return {std::move(sum), std::move(diff)};
}

}  // namespace covagram
