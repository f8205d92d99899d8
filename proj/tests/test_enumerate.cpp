#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "covagram/lattice.hpp"
#include "support.hpp"

using namespace covagram;
using namespace covagram::testsupport;

namespace {

std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> class_counts(
    const std::vector<Polyomino>& reps) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> counts;
  for (const Polyomino& p : reps) ++counts[bounding_box_class(p)];
  return counts;
}

bool pair_matches(const HomometricPair& pair, const LatticeSet& a, const LatticeSet& b) {
  LatticeSet pa = canonical_form(pair.first.cells(), SymmetryGroup::TranslationPointReflection);
  LatticeSet pb = canonical_form(pair.second.cells(), SymmetryGroup::TranslationPointReflection);
  for (int k = 0; k < kSquareIsometryCount; ++k) {
    LatticeSet ka = canonical_form(a.transformed(k), SymmetryGroup::TranslationPointReflection);
    LatticeSet kb = canonical_form(b.transformed(k), SymmetryGroup::TranslationPointReflection);
    if ((ka == pa && kb == pb) || (ka == pb && kb == pa)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("translation-class counts match the independent generators") {
  // Frozen sequence, cross-checked below by two independent strategies.
  const std::int64_t expected[] = {1, 2, 6, 19, 63, 216, 760, 2725, 9910};
  for (int d = 1; d <= 9; ++d) {
    auto reps = enumerate_polyominoes(d, SymmetryGroup::TranslationOnly);
    CHECK(static_cast<std::int64_t>(reps.size()) == expected[d - 1]);
    CHECK(static_cast<std::int64_t>(grow_fixed(d).size()) == expected[d - 1]);
  }
  for (int d = 1; d <= 6; ++d)
    CHECK(naive_fixed_count(d) == expected[d - 1]);
}

TEST_CASE("every emitted representative is connected, canonical and unique") {
  for (SymmetryGroup g : {SymmetryGroup::TranslationOnly,
                          SymmetryGroup::TranslationPointReflection,
                          SymmetryGroup::FullSquareIsometry}) {
    auto reps = enumerate_polyominoes(6, g);
    std::set<std::vector<LatticePoint>> seen;
    for (const Polyomino& p : reps) {
      CHECK(is_connected_animal(p.cells()));
      CHECK(canonical_form(p.cells(), g) == p.cells());
      CHECK(seen.insert(p.cells().points()).second);
    }
  }
}

TEST_CASE("single cell enumerates to one polyomino in every group") {
  for (SymmetryGroup g : {SymmetryGroup::TranslationOnly,
                          SymmetryGroup::TranslationPointReflection,
                          SymmetryGroup::FullSquareIsometry})
    CHECK(enumerate_polyominoes(1, g).size() == 1);
}

TEST_CASE("cell count bounds are enforced") {
  CHECK_THROWS_AS(enumerate_polyominoes(0, SymmetryGroup::TranslationOnly),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_polyominoes(kMaxEnumerationCells + 1,
                                        SymmetryGroup::TranslationOnly),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_homometric_pairs(0), std::invalid_argument);
}

TEST_CASE("class counts modulo translations and point reflections") {
  auto c3 = class_counts(enumerate_polyominoes(3, SymmetryGroup::TranslationPointReflection));
  CHECK(c3[{2, 2}] == 2);
  CHECK(c3[{1, 3}] == 1);
  CHECK(c3[{3, 1}] == 1);

  auto c4 = class_counts(enumerate_polyominoes(4, SymmetryGroup::TranslationPointReflection));
  CHECK(c4[{2, 3}] == 5);

  auto c5 = class_counts(enumerate_polyominoes(5, SymmetryGroup::TranslationPointReflection));
  CHECK(c5[{2, 4}] == 6);
  CHECK(c5[{2, 3}] == 3);
  // Of the 25 translation classes in the 3x3 box, five are fixed by point
  // reflection (the cross and the four S/Z orientations), so the class count
  // is (25 - 5)/2 + 5. The independent oracle below confirms it.
  CHECK(c5[{3, 3}] == 15);

  std::map<std::pair<std::int64_t, std::int64_t>, std::set<std::vector<LatticePoint>>> oracle;
  for (const LatticeSet& s : grow_fixed(5)) {
    Polyomino p(canonical_form(s, SymmetryGroup::TranslationPointReflection));
    oracle[bounding_box_class(p)].insert(p.cells().points());
  }
  CHECK(static_cast<std::int64_t>(oracle[{3, 3}].size()) == 15);
  CHECK(static_cast<std::int64_t>(oracle[{2, 4}].size()) == 6);
  CHECK(static_cast<std::int64_t>(oracle[{2, 3}].size()) == 3);
}

TEST_CASE("no homometric non-congruent pairs below nine cells (small sizes)") {
  for (int d = 1; d <= 6; ++d) CHECK(search_homometric_pairs(d).empty());
}

TEST_CASE("search output is independent of the thread budget") {
  auto run_with = [](const char* threads) {
    setenv("COVAGRAM_THREADS", threads, 1);
    auto pairs = search_homometric_pairs(7);
    auto reps = enumerate_polyominoes(7, SymmetryGroup::TranslationPointReflection);
    unsetenv("COVAGRAM_THREADS");
    return std::pair{pairs.size(), reps};
  };
  auto [pairs1, reps1] = run_with("1");
  auto [pairs4, reps4] = run_with("4");
  CHECK(pairs1 == pairs4);
  REQUIRE(reps1.size() == reps4.size());
  for (std::size_t i = 0; i < reps1.size(); ++i) CHECK(reps1[i] == reps4[i]);
}

TEST_CASE("nine-cell search finds the sum/difference pair and a mirror pair") {
  auto pairs = search_homometric_pairs(9);
  REQUIRE(!pairs.empty());

  int none_count = 0, reflection_count = 0;
  for (const HomometricPair& pair : pairs) {
    // postconditions: homometric, not congruent modulo translations and
    // point reflections
    CHECK(difference_multiset(pair.first.cells()) == difference_multiset(pair.second.cells()));
    CHECK_FALSE(congruent(pair.first.cells(), pair.second.cells(),
                          SymmetryGroup::TranslationPointReflection));
    if (pair.congruence == PairCongruence::None) ++none_count;
    if (pair.congruence == PairCongruence::LineReflection) ++reflection_count;
  }
  CHECK(none_count > 0);
  CHECK(reflection_count > 0);

  auto [p, q] = sum_diff_construction(tromino_2l(), tromino_l());
  bool found = false;
  for (const HomometricPair& pair : pairs)
    if (pair_matches(pair, p, q)) found = true;
  CHECK(found);
}
