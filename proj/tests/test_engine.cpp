#include <algorithm>
#include <set>

#include "doctest.h"
#include "houghton/engine.hpp"
#include "houghton/perm.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

FinitePermutation cyc(std::initializer_list<std::int64_t> pts) {
  Cycle c;
  for (auto p : pts) c.push_back(ray_point(1, p));
  return FinitePermutation::from_cycles({c});
}

std::uint64_t enumerated_order(const std::vector<FinitePermutation>& gens) {
  return bfs_enumerate(gens, 100000).size();
}

}  // namespace

TEST_CASE("schreier-sims order agrees with brute enumeration") {
  struct Sample {
    std::vector<FinitePermutation> gens;
    std::uint64_t order;
  };
  std::vector<Sample> samples = {
      {{cyc({1, 2}), cyc({1, 2, 3, 4})}, 24},           // full symmetric
      {{cyc({1, 2, 3}), cyc({2, 3, 4})}, 12},           // alternating
      {{cyc({1, 2, 3, 4, 5, 6})}, 6},                   // cyclic
      {{cyc({1, 2, 3, 4}), cyc({1, 3})}, 8},            // dihedral
      {{cyc({1, 2}), cyc({3, 4})}, 4},                  // klein four
      {{cyc({1, 2, 3}), cyc({4, 5, 6}), cyc({1, 4})},   // wreath-like
       0},  // order checked only against enumeration below
  };
  for (const auto& s : samples) {
    std::vector<Point> window = support_union(s.gens);
    PermGroup grp(window, s.gens);
    std::uint64_t brute = enumerated_order(s.gens);
    CHECK(grp.order() == BigUInt(brute));
    if (s.order != 0) CHECK(grp.order() == BigUInt(s.order));
  }
}

TEST_CASE("membership matches the enumerated element set") {
  std::vector<FinitePermutation> gens = {cyc({1, 2, 3}), cyc({2, 3, 4})};
  std::vector<FinitePermutation> all = bfs_enumerate(gens, 1000);
  CHECK(all.size() == 12);
  PermGroup grp(support_union(gens), gens);
  std::set<std::string> inside;
  for (const auto& p : all) inside.insert(to_string(p));
  CHECK(grp.contains(cyc({1, 3, 4})));
  CHECK(!grp.contains(cyc({1, 2})));           // odd
  CHECK(!grp.contains(cyc({1, 2, 5})));        // outside the window
  for (const auto& p : all) CHECK(grp.contains(p));
  // Products of members stay members (spot check against the set).
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 4)
      CHECK(inside.count(to_string(fp_compose(all[i], all[j]))) == 1);
}

TEST_CASE("enumeration enforces its element budget") {
  std::vector<FinitePermutation> gens = {cyc({1, 2}), cyc({1, 2, 3, 4, 5})};
  CHECK_THROWS_AS(bfs_enumerate(gens, 30), error);  // S_5 has 120 elements
  CHECK(bfs_enumerate(gens, 120).size() == 120);
}

TEST_CASE("generated class distinguishes proper, alternating and full") {
  auto classify = [](const std::vector<FinitePermutation>& gens) {
    return classify_generated(gens);
  };
  CHECK(classify({cyc({1, 2, 3}), cyc({2, 3, 4})}) ==
        GeneratedClass::contains_alt_only);
  CHECK(classify({cyc({1, 2}), cyc({1, 2, 3, 4})}) ==
        GeneratedClass::contains_alt_full_sym);
  CHECK(classify({cyc({1, 2, 3, 4})}) == GeneratedClass::proper);
  CHECK(classify({cyc({1, 2}), cyc({3, 4})}) == GeneratedClass::proper);
  CHECK(std::string(to_string(GeneratedClass::contains_alt_only)) ==
        "contains-alt-only");
}

TEST_CASE("consecutive three-cycles generate the alternating group") {
  for (int size = 5; size <= 9; ++size) {
    std::vector<FinitePermutation> gens;
    for (int i = 1; i + 2 <= size; ++i) gens.push_back(cyc({i, i + 1, i + 2}));
    std::vector<Point> window = support_union(gens);
    CHECK(static_cast<int>(window.size()) == size);
    CHECK(classify_generated(gens) == GeneratedClass::contains_alt_only);
    // Order is size!/2.
    BigUInt expect = 1;
    for (int k = 2; k <= size; ++k) expect *= static_cast<unsigned>(k);
    expect /= 2;
    CHECK(PermGroup(window, gens).order() == expect);
  }
}

TEST_CASE("group order computation is deterministic") {
  std::vector<FinitePermutation> gens = {cyc({1, 3, 5}), cyc({2, 4, 6}),
                                         cyc({1, 2})};
  auto window = support_union(gens);
  BigUInt first = PermGroup(window, gens).order();
  for (int rep = 0; rep < 3; ++rep)
    CHECK(PermGroup(window, gens).order() == first);
}
