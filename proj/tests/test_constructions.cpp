#include <set>

#include "doctest.h"
#include "houghton/constructions.hpp"
#include "oracles.hpp"

using namespace houghton;

namespace {

FinitePermutation line_cycle(std::initializer_list<std::int64_t> pts) {
  Cycle c;
  for (auto p : pts) c.push_back(line_point(p));
  return FinitePermutation::from_cycles({c});
}

SubgroupDescriptor checkerboard(SymType type) {
  SubgroupDescriptor d;
  d.n = 3;
  d.lattice = lat_make(2, {{1, 1}, {1, -1}});
  d.sym_type = type;
  return d;
}

}  // namespace

TEST_CASE("shifted-copy product conjugates down to every small 3-cycle") {
  for (std::int64_t k : {3, 4}) {
    for (bool fsym : {false, true}) {
      Lemma37Data d = build_lemma37_data(k, fsym);
      CHECK(d.trace.all_passed());
      CHECK(d.r == (2 * k) * (2 * k - 1) * (2 * k - 2) / 6);
      CHECK(static_cast<std::int64_t>(d.omegas.size()) == d.r);
      CHECK(d.omegas.front() == line_cycle({1, 2, 3}));
      CHECK(d.omegas.back() == line_cycle({2 * k - 2, 2 * k - 1, 2 * k}));
      CHECK(fp_parity(d.alpha) == (fsym ? Parity::odd : Parity::even));

      // Re-derive the two anchor identities with bare permutation calls.
      FinitePermutation top = fp_shift(d.alpha, -2 * (d.r + 1) * k);
      CHECK(fp_commutator(top, d.alpha) == line_cycle({1, 2, 3}));
    }
  }
  CHECK(build_lemma37(3, false).all_passed());
  CHECK_THROWS_AS(build_lemma37_data(2, false), error);
}

TEST_CASE("triple descent ends at the anchored 3-cycle for every size") {
  for (std::int64_t K : {1, 2, 6, 12})
    CHECK(build_exceptional_h2(K).all_passed());
  CHECK_THROWS_AS(build_exceptional_h2(0), error);

  // Independent replay of the k=3 descent using raw permutation calls.
  FinitePermutation s = line_cycle({0, 3, 4});
  s = fp_conjugate(fp_inverse(s), line_cycle({0, 2, 3}));
  CHECK(s == line_cycle({0, 2, 4}));
  s = fp_conjugate(fp_inverse(s), line_cycle({0, 1, 2}));
  CHECK(s == line_cycle({0, 1, 4}));
}

TEST_CASE("pushed-block key element construction traces pass") {
  GenofGcData d12 = build_genofGc_data({1, 2});
  CHECK(d12.trace.all_passed());
  CHECK(d12.relabel_a == 0);
  CHECK(d12.k == 4);
  CHECK(d12.r == 56);  // 8 choose 3
  CHECK(d12.at_most_one_odd);

  // The largest entry is moved onto the last ray before building.
  GenofGcData d32 = build_genofGc_data({3, 2});
  CHECK(d32.trace.all_passed());
  CHECK(d32.relabel_a == 3);
  CHECK(d32.relabel_b == 2);
  CHECK(d32.c_relabeled == std::vector<std::int64_t>{2, 3});

  // Two odd entries: the odd-commutator witness path.
  GenofGcData d33 = build_genofGc_data({3, 3});
  CHECK(d33.trace.all_passed());
  CHECK(!d33.at_most_one_odd);

  // Four rays.
  CHECK(build_genofGc({1, 1, 2}).all_passed());

  // All-ones diagonal has no key element; bad entries are rejected.
  CHECK_THROWS_AS(build_genofGc_data({1, 1}), error);
  CHECK_THROWS_AS(build_genofGc_data({0, 2}), error);
  CHECK_THROWS_AS(build_genofGc_data({2}), error);
}

TEST_CASE("commutator-with-shift support data matches frozen values") {
  ErratumOmegaData d = build_erratum_omega_core(8, 1, {});
  CHECK(d.trace.all_passed());
  CHECK(d.core_ok);
  CHECK(d.pprime == 11);
  CHECK(d.a == 1);
  CHECK(d.b == 0);
  CHECK(d.q_formula == 33);
  CHECK(d.beta_shift == 88);
  CHECK(d.qstar == 89);
  CHECK(d.run == 5);
  CHECK(d.elevation == 8);

  // Frozen cycle structure of the commutator alpha.
  CHECK(d.alpha.support_size() == 40);
  CHECK(d.alpha.apply(line_point(1)) == line_point(40));
  CHECK(d.alpha.apply(line_point(33)) == line_point(2));
  CHECK(d.alpha.apply(line_point(2)) == line_point(1));
  CHECK(d.alpha.apply(line_point(10)) == line_point(41));
  CHECK(d.alpha.apply(line_point(48)) == line_point(9));
  CHECK(d.alpha.apply(line_point(65)) == line_point(83));
  CHECK(d.alpha.apply(line_point(80)) == line_point(90));
  CHECK(d.alpha.apply(line_point(91)) == line_point(73));

  CHECK(d.beta == fp_shift(d.alpha, 88));
  CHECK(d.cycle3 == line_cycle({89, 90, 91}));
  CHECK(fp_commutator(d.beta, d.alpha) == d.cycle3);

  // The single overlap point between the two supports.
  std::set<std::int64_t> sa, sb, inter;
  for (const Point& p : d.alpha.support()) sa.insert(p.index);
  for (const Point& p : d.beta.support()) sb.insert(p.index);
  for (auto x : sa)
    if (sb.count(x)) inter.insert(x);
  CHECK(inter == std::set<std::int64_t>{90});
}

TEST_CASE("commutator-with-shift wrapper honors the avoided element") {
  CHECK(build_erratum_omega(8, FinitePermutation::from_entries({}))
            .all_passed());
  CHECK(build_erratum_omega(8, line_cycle({1, 2, 3})).all_passed());
  CHECK(build_erratum_omega(16, fp_compose(line_cycle({1, 2}),
                                           line_cycle({5, 6, 7, 8, 9})))
            .all_passed());
  // Ray-mode input is a domain error; k must be a positive multiple of 8.
  CHECK_THROWS_AS(
      build_erratum_omega(
          8, FinitePermutation::from_cycles(
                 {{ray_point(1, 1), ray_point(1, 2)}})),
      error);
  CHECK_THROWS_AS(build_erratum_omega_core(7, 1, {}), error);
  CHECK_THROWS_AS(build_erratum_omega_core(8, 0, {}), error);
}

TEST_CASE("uniform-cycle elements exist exactly as documented") {
  CHECK(build_pcycle(2, 8, false).all_passed());
  CHECK(build_pcycle(3, 8, false).all_passed());
  CHECK(build_pcycle(5, 8, false).all_passed());
  CHECK(build_pcycle(2, 8, true).all_passed());
  CHECK(build_pcycle(6, 8, true).all_passed());
  CHECK_THROWS_AS(build_pcycle(3, 8, true), error);   // no odd fsym witness
  CHECK_THROWS_AS(build_pcycle(1, 8, false), error);
  CHECK_THROWS_AS(build_pcycle(2, 4, false), error);

  // Cross-wiring two blocks must be caught by the cycle-shape check.
  ConstructionTrace bad = build_pcycle(2, 8, false, 5);
  CHECK(!bad.all_passed());
  bool saw_witness = false;
  for (const auto& c : bad.checks())
    if (!c.passed && !c.witness.empty()) saw_witness = true;
  CHECK(saw_witness);
}

TEST_CASE("translation elements are aperiodic away from their fixed sets") {
  TranslationData alt = choose_translation_elements(checkerboard(SymType::alt));
  CHECK(alt.d == 2);
  CHECK(alt.sigma[0] == FinitePermutation::from_cycles(
                            {{ray_point(1, 1), ray_point(1, 2)}}));
  CHECK(alt.sigma[1].is_identity());
  CHECK(alt.m == std::vector<std::int64_t>{1, 1});
  CHECK(alt.F.empty());
  CHECK(to_string(alt.f[0]) ==
        "H[n=3; s=(2,-2,0); {(1,1)->(1,4),(1,2)->(1,3),(2,1)->(1,2),"
        "(2,2)->(1,1)}]");
  CHECK(to_string(alt.f[1]) == "H[n=3; s=(2,0,-2); {(3,1)->(1,2),(3,2)->(1,1)}]");
  for (const auto& f : alt.f) CHECK(he_orbits(f).finite_cycles.empty());

  TranslationData diag = choose_translation_elements(
      make_diagonal_descriptor(3, {2, 3}, SymType::fsym));
  CHECK(diag.d == 6);
  CHECK(diag.F.empty());
  for (const auto& f : diag.f) {
    CHECK(he_orbits(f).finite_cycles.empty());
    CHECK(desc_membership(make_diagonal_descriptor(3, {2, 3}, SymType::fsym),
                          f));
  }

  // The twisted unit subgroup pins one point.
  TranslationData exc = choose_translation_elements(
      make_diagonal_descriptor(2, {1}, SymType::alt, {Twist::swap_pair}));
  CHECK(exc.d == 1);
  CHECK(exc.F == std::set<Point>{ray_point(1, 2)});
}

TEST_CASE("aperiodic witness pair splits into two disjoint cycles") {
  SubgroupDescriptor alt = checkerboard(SymType::alt);
  Prop6Data d = build_prop6_data(alt, desc_generators(alt));
  CHECK(d.trace.all_passed());
  CHECK(d.kappa == 2);
  CHECK(d.jstar == 4);
  CHECK(d.r == 420);
  CHECK(d.q == 421);
  CHECK(d.conj_exp == 0);
  CHECK(oracles::brute_order(d.omega1, 500) == 421);
  CHECK(fp_parity(d.omega1) == Parity::even);
  CHECK(fp_pow(d.omega, d.r) == fp_pow(d.omega1, d.r));

  SubgroupDescriptor fs = checkerboard(SymType::fsym);
  Prop6Data df = build_prop6_data(fs, desc_generators(fs));
  CHECK(df.trace.all_passed());

  // Small diagonal cases, including the pinned-point subgroup.
  SubgroupDescriptor exc =
      make_diagonal_descriptor(2, {1}, SymType::alt, {Twist::swap_pair});
  Prop6Data de = build_prop6_data(exc, desc_generators(exc));
  CHECK(de.trace.all_passed());
  CHECK(de.q == 61);
  CHECK(de.r == 60);
  CHECK(de.conj_exp == 189);

  Prop6Data dd = build_prop6_data(
      make_diagonal_descriptor(3, {2, 4}, SymType::alt),
      desc_generators(make_diagonal_descriptor(3, {2, 4}, SymType::alt)));
  CHECK(dd.trace.all_passed());
}

TEST_CASE("sweep words clear a finite target into the first ray") {
  SubgroupDescriptor alt = checkerboard(SymType::alt);
  TranslationData tr = choose_translation_elements(alt);
  WordEnv env;
  env.emplace("f2", tr.f[0]);
  env.emplace("f3", tr.f[1]);
  std::vector<Point> target{ray_point(2, 1), ray_point(3, 2), ray_point(1, 1),
                            ray_point(3, 5)};
  GroupWord w = sweep_into_ray1(3, env, tr.F, target);
  HoughtonElement moved = word_eval(3, w, &env);
  for (const Point& x : target) {
    Point y = moved.eval(x);
    CHECK(y.ray == 1);
    CHECK(tr.F.count(y) == 0);
  }

  // A pinned point needs the cycle element to lift it off the fixed set.
  SubgroupDescriptor exc =
      make_diagonal_descriptor(2, {1}, SymType::alt, {Twist::swap_pair});
  Prop6Data pe = build_prop6_data(exc, desc_generators(exc));
  WordEnv env2;
  env2.emplace("f2", pe.trans.f[0]);
  env2.emplace("omega1", he_from_perm(2, pe.omega1));
  std::vector<Point> target2{ray_point(1, 2), ray_point(2, 1)};
  GroupWord w2 = sweep_into_ray1(2, env2, pe.trans.F, target2);
  HoughtonElement moved2 = word_eval(2, w2, &env2);
  for (const Point& x : target2) {
    Point y = moved2.eval(x);
    CHECK(y.ray == 1);
    CHECK(pe.trans.F.count(y) == 0);
  }

  // No funnels, or funnels pointing the wrong way, are rejected.
  WordEnv empty_env;
  CHECK_THROWS_AS(sweep_into_ray1(3, empty_env, {}, target), error);
  WordEnv backwards;
  backwards.emplace("f2", he_inv(tr.f[0]));
  backwards.emplace("f3", tr.f[1]);
  CHECK_THROWS_AS(sweep_into_ray1(3, backwards, {}, target), error);
}

TEST_CASE("generating sets have minimal size and stay inside the subgroup") {
  std::vector<SubgroupDescriptor> descs = {
      make_diagonal_descriptor(3, {2, 3}, SymType::fsym),
      make_diagonal_descriptor(3, {2, 3}, SymType::alt),
      make_diagonal_descriptor(3, {3, 5}, SymType::fsym),
      make_diagonal_descriptor(3, {1, 1}, SymType::fsym),
      make_diagonal_descriptor(4, {2, 2, 2}, SymType::alt),
      make_diagonal_descriptor(4, {1, 1, 2}, SymType::fsym),
      make_diagonal_descriptor(2, {4}, SymType::fsym),
      make_diagonal_descriptor(2, {1}, SymType::alt, {Twist::swap_pair}),
      make_diagonal_descriptor(3, {2, 2}, SymType::alt,
                               {Twist::swap_pair, Twist::trivial}),
      checkerboard(SymType::alt),
      checkerboard(SymType::fsym),
  };
  for (const auto& d : descs) {
    std::vector<HoughtonElement> gens = desc_generating_set(d);
    CHECK(static_cast<int>(gens.size()) == desc_d(d));
    for (const auto& g : gens) CHECK(desc_membership(d, g));
  }
}
