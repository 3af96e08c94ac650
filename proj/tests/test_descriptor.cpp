#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "houghton/descriptor.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

HoughtonElement lone_swap(int n) { return twist_element(n, Twist::swap_pair); }

SubgroupDescriptor general_alt_checkerboard() {
  SubgroupDescriptor d;
  d.n = 3;
  d.lattice = lat_make(2, {{1, 1}, {1, -1}});
  d.sym_type = SymType::alt;
  return d;
}

}  // namespace

TEST_CASE("descriptor validation rejects inconsistent data") {
  auto expect_invalid = [](const SubgroupDescriptor& d) {
    CHECK(!desc_validate(d).ok);
    CHECK_THROWS_AS(desc_index(d), error);
  };

  // Alternating type needs the parity pairing to vanish on the lattice.
  expect_invalid(make_diagonal_descriptor(3, {3, 5}, SymType::alt));
  CHECK(desc_validate(make_diagonal_descriptor(3, {3, 5}, SymType::fsym)).ok);
  CHECK(desc_validate(make_diagonal_descriptor(3, {2, 5}, SymType::alt)).ok);

  // Twists demand alt type, matching length, and a diagonal lattice.
  SubgroupDescriptor tw = make_diagonal_descriptor(
      3, {2, 2}, SymType::alt, {Twist::swap_pair, Twist::trivial});
  CHECK(desc_validate(tw).ok);
  tw.sym_type = SymType::fsym;
  expect_invalid(tw);
  SubgroupDescriptor short_tw =
      make_diagonal_descriptor(3, {2, 2}, SymType::alt);
  short_tw.twists = {Twist::swap_pair};
  expect_invalid(short_tw);
  SubgroupDescriptor gen = general_alt_checkerboard();
  CHECK(desc_validate(gen).ok);
  gen.twists = {Twist::swap_pair, Twist::trivial};
  expect_invalid(gen);

  // Dimension and rank problems.
  SubgroupDescriptor dim;
  dim.n = 3;
  dim.lattice = lat_make(1, {{2}});
  dim.sym_type = SymType::fsym;
  expect_invalid(dim);
  SubgroupDescriptor thin;
  thin.n = 3;
  thin.lattice = lat_make(2, {{2, 4}});
  thin.sym_type = SymType::fsym;
  expect_invalid(thin);
}

TEST_CASE("index is the lattice index doubled for alternating type") {
  CHECK(desc_index(make_diagonal_descriptor(3, {2, 3}, SymType::alt)) == 12);
  CHECK(desc_index(make_diagonal_descriptor(3, {2, 3}, SymType::fsym)) == 6);
  CHECK(desc_index(make_diagonal_descriptor(2, {1}, SymType::fsym)) == 1);
  CHECK(desc_index(make_diagonal_descriptor(2, {1}, SymType::alt)) == 2);
  CHECK(desc_index(general_alt_checkerboard()) == 4);
}

TEST_CASE("minimal generating number follows the parity of the lattice") {
  // n = 2 is always two-generated.
  CHECK(desc_d(make_diagonal_descriptor(2, {5}, SymType::fsym)) == 2);
  CHECK(desc_d(make_diagonal_descriptor(2, {4}, SymType::alt)) == 2);

  // Alternating type always drops to n-1.
  CHECK(desc_d(make_diagonal_descriptor(3, {2, 2}, SymType::alt)) == 2);
  CHECK(desc_d(make_diagonal_descriptor(4, {2, 2, 2}, SymType::alt)) == 3);
  CHECK(desc_d(general_alt_checkerboard()) == 2);

  // Symmetric type needs n generators exactly when no odd pair exists.
  CHECK(desc_d(make_diagonal_descriptor(3, {2, 2}, SymType::fsym)) == 3);
  CHECK(desc_d(make_diagonal_descriptor(3, {2, 5}, SymType::fsym)) == 3);
  CHECK(desc_d(make_diagonal_descriptor(3, {3, 5}, SymType::fsym)) == 2);
  CHECK(desc_d(make_diagonal_descriptor(4, {1, 1, 2}, SymType::fsym)) == 3);
  SubgroupDescriptor fs = general_alt_checkerboard();
  fs.sym_type = SymType::fsym;
  CHECK(desc_d(fs) == 3);
}

TEST_CASE("diagonal odd-entry counting agrees with the parity pairing") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    std::vector<std::int64_t> c;
    int odd = 0;
    for (int i = 0; i < n - 1; ++i) {
      c.push_back(1 + static_cast<std::int64_t>(rng() % 6));
      if (c.back() % 2 != 0) ++odd;
    }
    SubgroupDescriptor d = make_diagonal_descriptor(n, c, SymType::fsym);
    CHECK(lat_has_odd_pair(d.lattice) == (odd >= 2));
    CHECK(desc_d(d) == (odd >= 2 ? n - 1 : n));
  }
}

TEST_CASE("abelianization gains a torsion factor only without odd pairs") {
  CHECK(desc_abelianization(make_diagonal_descriptor(3, {2, 2},
                                                     SymType::fsym)) ==
        "Z^2xC2");
  CHECK(desc_abelianization(make_diagonal_descriptor(3, {3, 5},
                                                     SymType::fsym)) == "Z^2");
  CHECK(desc_abelianization(make_diagonal_descriptor(3, {2, 2},
                                                     SymType::alt)) == "Z^2");
  CHECK(desc_abelianization(make_diagonal_descriptor(2, {3},
                                                     SymType::fsym)) ==
        "ZxC2");
  CHECK(desc_abelianization(make_diagonal_descriptor(2, {3}, SymType::alt)) ==
        "Z");
}

TEST_CASE("membership accepts generator words and rejects bad translations") {
  std::mt19937_64 rng(32);
  std::vector<SubgroupDescriptor> descs = {
      make_diagonal_descriptor(3, {2, 3}, SymType::fsym),
      make_diagonal_descriptor(3, {2, 3}, SymType::alt),
      make_diagonal_descriptor(3, {2, 2}, SymType::alt,
                               {Twist::swap_pair, Twist::trivial}),
      make_diagonal_descriptor(2, {3}, SymType::alt),
      make_diagonal_descriptor(4, {1, 2, 2}, SymType::fsym),
      general_alt_checkerboard(),
  };
  for (const auto& d : descs) {
    std::vector<HoughtonElement> gens = desc_generators(d);
    for (const auto& g : gens) CHECK(desc_membership(d, g));

    for (int trial = 0; trial < 20; ++trial) {
      HoughtonElement w = he_identity(d.n);
      for (int step = 0; step < 5; ++step) {
        const HoughtonElement& g = gens[rng() % gens.size()];
        w = he_mul(w, rng() % 2 ? g : he_inv(g));
      }
      CHECK(desc_membership(d, w));
      CHECK(desc_membership(d, he_inv(w)));
      // Tacking on one transposition flips membership exactly for alt type.
      HoughtonElement flipped = he_mul(lone_swap(d.n), w);
      CHECK(desc_membership(d, flipped) == (d.sym_type == SymType::fsym));
    }
  }

  // Translations outside the lattice never belong.
  SubgroupDescriptor d23 = make_diagonal_descriptor(3, {2, 3}, SymType::fsym);
  CHECK(!desc_membership(d23, he_pow(he_generator(3, 2), 3)));
  CHECK(!desc_membership(d23, he_generator(3, 3)));
  CHECK(desc_membership(d23, he_pow(he_generator(3, 3), 3)));
  CHECK_THROWS_AS(desc_membership(d23, he_identity(2)), error);
}

TEST_CASE("twisted subgroups pair the swap with odd axis visits") {
  SubgroupDescriptor tw = make_diagonal_descriptor(
      3, {2, 2}, SymType::alt, {Twist::swap_pair, Twist::trivial});
  HoughtonElement g2c = he_pow(he_generator(3, 2), 2);
  HoughtonElement g3c = he_pow(he_generator(3, 3), 2);
  // Axis 2 visits must carry the swap; bare powers fail, dressed ones pass.
  CHECK(!desc_membership(tw, g2c));
  CHECK(desc_membership(tw, he_mul(lone_swap(3), g2c)));
  CHECK(desc_membership(tw, g3c));
  CHECK(!desc_membership(tw, he_mul(lone_swap(3), g3c)));
  // Two twisted visits cancel the swaps.
  CHECK(desc_membership(tw, he_mul(he_mul(lone_swap(3), g2c),
                                   he_mul(lone_swap(3), g2c))));
}

TEST_CASE("alt descriptors depend on the written rows, not just the lattice") {
  // Same translation lattice presented by two different spanning sets.
  SubgroupDescriptor a = general_alt_checkerboard();
  SubgroupDescriptor b;
  b.n = 3;
  b.lattice = lat_make(2, {{1, 1}, {2, 0}});
  b.sym_type = SymType::alt;
  REQUIRE(lat_member(a.lattice, {2, 0}));
  REQUIRE(lat_member(b.lattice, {1, -1}));

  HoughtonElement g2sq = he_pow(he_generator(3, 2), 2);
  HoughtonElement both_sq = he_mul(g2sq, he_pow(he_generator(3, 3), 2));
  CHECK(!desc_membership(a, g2sq));
  CHECK(!desc_membership(a, both_sq));
  CHECK(desc_membership(b, g2sq));

  // The generic witness search notices the difference too.
  HoughtonElement w = desc_distinguishing_witness(a, b);
  CHECK(desc_membership(a, w) != desc_membership(b, w));

  // For fsym type only the lattice matters.
  SubgroupDescriptor af = a, bf = b;
  af.sym_type = bf.sym_type = SymType::fsym;
  CHECK(desc_membership(af, g2sq));
  CHECK(desc_membership(bf, g2sq));
  CHECK(desc_normalize(af).normal_form == desc_normalize(bf).normal_form);
}

TEST_CASE("coset representatives realize the full index") {
  struct Case {
    SubgroupDescriptor d;
    std::vector<std::int64_t> box;  // fundamental domain sides
  };
  std::vector<Case> cases = {
      {make_diagonal_descriptor(3, {2, 3}, SymType::alt), {2, 3}},
      {make_diagonal_descriptor(3, {2, 2}, SymType::fsym), {2, 2}},
      {make_diagonal_descriptor(2, {3}, SymType::alt), {3}},
  };
  for (const auto& [d, box] : cases) {
    std::vector<HoughtonElement> reps;
    std::vector<std::int64_t> v(box.size(), 0);
    bool done = false;
    while (!done) {
      TranslationVector tv(v.begin(), v.end());
      HoughtonElement base = he_canonical_preimage(d.n, tv);
      reps.push_back(base);
      if (d.sym_type == SymType::alt)
        reps.push_back(he_mul(lone_swap(d.n), base));
      // Odometer step through the box.
      std::size_t pos = 0;
      while (pos < v.size()) {
        if (++v[pos] < box[pos]) break;
        v[pos++] = 0;
      }
      done = pos == v.size();
    }
    CHECK(BigInt(reps.size()) == desc_index(d));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        CHECK(desc_membership(d, he_mul(reps[i], he_inv(reps[j]))) ==
              (i == j));
  }
}

TEST_CASE("enumeration lists one symmetric and the twisted alternating set") {
  auto fives = desc_enumerate(3, {2, 4});
  CHECK(fives.size() == 5);
  auto nines = desc_enumerate(4, {2, 2, 2});
  CHECK(nines.size() == 9);
  auto lone = desc_enumerate(3, {3, 5});
  CHECK(lone.size() == 1);
  CHECK(lone[0].sym_type == SymType::fsym);
  auto pair_n2 = desc_enumerate(2, {1});
  CHECK(pair_n2.size() == 3);

  // Every listed descriptor is valid and they are pairwise distinguishable
  // by an explicit membership witness.
  for (const auto& list : {fives, nines}) {
    for (const auto& d : list) CHECK(desc_validate(d).ok);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        HoughtonElement w = desc_distinguishing_witness(list[i], list[j]);
        CHECK(desc_membership(list[i], w) != desc_membership(list[j], w));
      }
  }

  CHECK_THROWS_AS(desc_enumerate(3, {2}), error);
  CHECK_THROWS_AS(desc_enumerate(3, {0, 2}), error);
}

TEST_CASE("normal forms sort diagonals and flag the exceptional subgroup") {
  CHECK(classify_descriptor(make_diagonal_descriptor(3, {4, 2}, SymType::fsym))
            .normal_form == "n=3; L=2,0;0,4; type=fsym");
  // Twists vanish in the normal form away from the exceptional case.
  CHECK(desc_normalize(make_diagonal_descriptor(
                           3, {2, 4}, SymType::alt,
                           {Twist::swap_pair, Twist::swap_pair}))
            .normal_form == "n=3; L=2,0;0,4; type=alt");
  NormalizeResult exc = desc_normalize(make_diagonal_descriptor(
      2, {1}, SymType::alt, {Twist::swap_pair}));
  CHECK(exc.exceptional);
  CHECK(exc.normal_form ==
        "n=2; L=1; type=alt; eps=(swap) "
        "[exceptional: isomorphism type unknown]");
  NormalizeResult plain = desc_normalize(
      make_diagonal_descriptor(2, {1}, SymType::alt));
  CHECK(!plain.exceptional);
  CHECK(plain.normal_form == "n=2; L=1; type=alt");

  // General lattices: fsym uses the hermite rows, alt only sorts.
  SubgroupDescriptor gf = general_alt_checkerboard();
  gf.sym_type = SymType::fsym;
  CHECK(desc_normalize(gf).normal_form == "n=3; L=1,1;0,2; type=fsym");
  CHECK(desc_normalize(general_alt_checkerboard()).normal_form ==
        "n=3; L=1,-1;1,1; type=alt");
}

TEST_CASE("classification report bundles the invariants") {
  ClassReport r =
      classify_descriptor(make_diagonal_descriptor(3, {2, 3}, SymType::alt));
  CHECK(r.index == 12);
  CHECK(r.d == 2);
  CHECK(r.abelianization == "Z^2");
  CHECK(r.normal_form == "n=3; L=2,0;0,3; type=alt");

  ClassReport g = classify_descriptor(general_alt_checkerboard());
  CHECK(g.index == 4);
  CHECK(g.d == 2);
  CHECK(g.abelianization == "Z^2");
}
