// Pass/fail certificates: replay each construction's identity checks, add
// finite-window generation evidence, and exercise the parity law, the window
// generation step, and membership decomposition on random samples.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "houghton/constructions.hpp"
#include "houghton/descriptor.hpp"
#include "houghton/element.hpp"
#include "houghton/engine.hpp"
#include "houghton/errors.hpp"
#include "houghton/lattice.hpp"
#include "houghton/perm.hpp"
#include "houghton/trace.hpp"

namespace houghton {

using ParamMap = std::map<std::string, std::int64_t>;

struct Report {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;  // shown on CLAIM
  std::vector<TraceCheck> checks;

  void add_param(const std::string& key, std::int64_t value) {
    params.emplace_back(key, std::to_string(value));
  }
  void add_param_text(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }
  void add_check(const std::string& name, bool passed,
                 const std::string& witness = "") {
    checks.push_back(TraceCheck{name, passed, witness});
  }
  void absorb(const ConstructionTrace& trace) {
    for (const auto& c : trace.checks()) checks.push_back(c);
  }
  bool overall() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string to_text() const {
    std::ostringstream out;
    out << "CLAIM " << claim;
    for (const auto& [k, v] : params) out << ' ' << k << '=' << v;
    out << '\n';
    for (const auto& c : checks) {
      out << "CHECK \"" << c.description << "\" "
          << (c.passed ? "PASS" : "FAIL");
      if (!c.witness.empty()) out << ' ' << c.witness;
      out << '\n';
    }
    out << "RESULT " << (overall() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }
};

namespace verify_detail {

inline std::int64_t get_param(const ParamMap& params, const std::string& key,
                              std::optional<std::int64_t> fallback = {}) {
  auto it = params.find(key);
  if (it != params.end()) return it->second;
  if (fallback) return *fallback;
  fail(errc::invalid_argument, "missing parameter " + key);
}

inline BigUInt half_factorial(std::int64_t n) {
  BigUInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f / 2;
}

// Generation evidence on a finite window: the generators yield exactly the
// alternating group of their joint support.
inline void check_alt_window(Report& rep, const std::string& label,
                             const std::vector<FinitePermutation>& gens,
                             std::int64_t window_size) {
  std::vector<Point> window = support_union(gens);
  bool size_ok = (std::int64_t)window.size() == window_size;
  rep.add_check(label + ": joint support has the expected size", size_ok,
                "size=" + std::to_string(window.size()));
  if (!size_ok) return;
  GeneratedClass cls = classify_generated(gens);
  rep.add_check(label + ": classified as the alternating group",
                cls == GeneratedClass::contains_alt_only, to_string(cls));
  PermGroup group(window, gens);
  BigUInt expected = half_factorial(window_size);
  bool order_ok = group.order() == expected;
  std::ostringstream w;
  w << "order=" << group.order();
  rep.add_check(label + ": stabilizer-chain order is (window size)!/2",
                order_ok, w.str());
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// Construction certificates.

inline Report verify_construction(
    const std::string& name, const ParamMap& params,
    const std::optional<SubgroupDescriptor>& desc = std::nullopt) {
  using verify_detail::get_param;
  Report rep;
  rep.claim = name;
  try {
    if (name == "lemma37") {
      const std::int64_t k = get_param(params, "k");
      const std::int64_t fsym = get_param(params, "fsym", 0);
      rep.add_param("k", k);
      rep.add_param("fsym", fsym);
      Lemma37Data data = build_lemma37_data(k, fsym != 0);
      rep.absorb(data.trace);
      verify_detail::check_alt_window(rep, "3-cycle window", data.omegas,
                                      2 * k);
    } else if (name == "exceptional_h2") {
      const std::int64_t K = get_param(params, "K");
      rep.add_param("K", K);
      rep.absorb(build_exceptional_h2(K));
    } else if (name == "genofGc") {
      std::vector<std::int64_t> c;
      for (int i = 2; i <= 9; ++i) {
        auto it = params.find("c" + std::to_string(i));
        if (it == params.end()) break;
        c.push_back(it->second);
      }
      if (c.empty()) fail(errc::invalid_argument, "missing parameters c2,...");
      for (std::size_t i = 0; i < c.size(); ++i)
        rep.add_param("c" + std::to_string(i + 2), c[i]);
      GenofGcData data = build_genofGc_data(c);
      rep.absorb(data.trace);
      std::vector<Point> window;
      for (std::int64_t i = 1; i <= 2 * data.k; ++i)
        window.push_back(ray_point(1, i));
      verify_detail::check_alt_window(
          rep, "3-cycle window", cons_detail::lex_three_cycles(window),
          2 * data.k);
    } else if (name == "erratum_omega") {
      const std::int64_t k = get_param(params, "k");
      const std::int64_t tau_cycle = get_param(params, "tau_cycle", 0);
      rep.add_param("k", k);
      if (tau_cycle > 0) rep.add_param("tau_cycle", tau_cycle);
      FinitePermutation tau;
      if (tau_cycle >= 2) {
        Cycle cyc;
        for (std::int64_t i = 1; i <= tau_cycle; ++i)
          cyc.push_back(line_point(i));
        tau = FinitePermutation::from_cycles({cyc});
      }
      std::set<std::int64_t> forbidden;
      for (const auto& [x, y] : tau.entries()) forbidden.insert(x.index);
      ErratumOmegaData data = build_erratum_omega_core(
          k, tau.is_identity() ? 1 : (std::int64_t)fp_order(tau), forbidden);
      rep.absorb(build_erratum_omega(k, tau));
      if (data.core_ok) {
        std::vector<FinitePermutation> threes;
        std::int64_t count = std::min(data.run, k - 3) + 1;
        for (std::int64_t i = 0; i < count; ++i)
          threes.push_back(FinitePermutation::from_cycles(
              {{line_point(data.qstar + i), line_point(data.qstar + i + 1),
                line_point(data.qstar + i + 2)}}));
        verify_detail::check_alt_window(rep, "consecutive 3-cycle run",
                                        threes, count + 2);
      }
    } else if (name == "pcycle") {
      const std::int64_t p = get_param(params, "p");
      const std::int64_t k = get_param(params, "k");
      const std::int64_t fsym = get_param(params, "fsym", 0);
      const std::int64_t sabotage = get_param(params, "sabotage", -1);
      rep.add_param("p", p);
      rep.add_param("k", k);
      rep.add_param("fsym", fsym);
      if (sabotage >= 0) rep.add_param("sabotage", sabotage);
      rep.absorb(build_pcycle(p, k, fsym != 0, sabotage));
    } else if (name == "prop6") {
      if (!desc)
        fail(errc::invalid_argument, "prop6 needs a subgroup descriptor");
      rep.add_param_text("desc", "\"" + format_descriptor(*desc) + "\"");
      Prop6Data data = build_prop6_data(*desc, desc_generators(*desc));
      rep.absorb(data.trace);
      // The sweep postcondition on a standard probe set: the first two
      // points of every ray plus the whole fixed set reach ray 1 clear of F.
      WordEnv env;
      for (std::size_t i = 0; i < data.trans.f.size(); ++i)
        env.emplace("f" + std::to_string(i + 2), data.trans.f[i]);
      env.emplace("omega1", he_from_perm(desc->n, data.omega1));
      std::vector<Point> probe(data.trans.F.begin(), data.trans.F.end());
      for (int ray = 1; ray <= desc->n; ++ray) {
        probe.push_back(ray_point(ray, 1));
        probe.push_back(ray_point(ray, 2));
      }
      GroupWord word = sweep_into_ray1(desc->n, env, data.trans.F, probe);
      HoughtonElement moved = word_eval(desc->n, word, &env);
      bool swept = true;
      for (const Point& x : probe) {
        Point y = moved.eval(x);
        if (y.ray != 1 || data.trans.F.count(y)) swept = false;
      }
      rep.add_check("a sweep word moves the probe set into ray 1 clear of "
                    "the fixed points",
                    swept, to_string(word));
    } else {
      fail(errc::invalid_argument, "unknown claim " + name);
    }
  } catch (const error& e) {
    if (e.code() == errc::not_applicable) {
      rep.add_check("construction reports itself not applicable, as "
                    "documented",
                    true, e.what());
    } else {
      rep.add_check("parameters are accepted", false, e.what());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The parity law: [g_i^{c_i}, g_j^{c_j}] is odd exactly when both exponents
// are odd, matching the bilinear parity form.

inline Report verify_parity_law(int n, std::int64_t c_max) {
  if (n < 3) fail(errc::invalid_argument, "need n >= 3");
  if (c_max < 1) fail(errc::invalid_argument, "need c_max >= 1");
  Report rep;
  rep.claim = "parity_law";
  rep.add_param("n", n);
  rep.add_param("c_max", c_max);

  for (int i = 2; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool agree = true;
      std::string witness;
      for (std::int64_t ci = 1; ci <= c_max && agree; ++ci) {
        for (std::int64_t cj = 1; cj <= c_max && agree; ++cj) {
          HoughtonElement comm = he_commutator(
              he_pow(he_generator(n, i), ci), he_pow(he_generator(n, j), cj));
          std::optional<Parity> par = he_parity_if_fsym(comm);
          if (!par) {
            agree = false;
            witness = "commutator not finitary";
            break;
          }
          bool direct_odd = *par == Parity::odd;
          bool rule_odd = (ci % 2 != 0) && (cj % 2 != 0);
          LatRow vi(static_cast<std::size_t>(n - 1), 0);
          LatRow vj(static_cast<std::size_t>(n - 1), 0);
          vi[static_cast<std::size_t>(i - 2)] = ci;
          vj[static_cast<std::size_t>(j - 2)] = cj;
          bool form_odd = lat_parity_form(vi, vj) != 0;
          if (direct_odd != rule_odd || direct_odd != form_odd) {
            agree = false;
            witness = "c" + std::to_string(i) + "=" + std::to_string(ci) +
                      " c" + std::to_string(j) + "=" + std::to_string(cj);
          }
        }
      }
      rep.add_check("rays (" + std::to_string(i) + "," + std::to_string(j) +
                        "): direct parity, both-odd rule, and the bilinear "
                        "form agree on all exponent pairs",
                    agree, witness);
    }
  }

  HoughtonElement base = he_commutator(he_generator(n, 2), he_generator(n, 3));
  rep.add_check("the commutator of two plain generators is the transposition "
                "of (1,1) and (1,2)",
                he_to_perm(base) ==
                    FinitePermutation::from_cycles(
                        {{ray_point(1, 1), ray_point(1, 2)}}),
                to_string(he_to_perm(base)));
  return rep;
}

// ---------------------------------------------------------------------------
// Window generation: consecutive 3-cycles of a 2k window and their two
// upward k-shifts generate the alternating group of the 4k window.

inline Report verify_window_lemma(std::int64_t k, bool sabotage = false) {
  if (k < 3 || k > 6)
    fail(errc::invalid_argument, "need 3 <= k <= 6 at desk scale");
  Report rep;
  rep.claim = "window_lemma";
  rep.add_param("k", k);
  if (sabotage) rep.add_param("sabotage", 1);

  std::vector<FinitePermutation> gens;
  for (std::int64_t shift : {std::int64_t{0}, k, 2 * k}) {
    for (std::int64_t i = 1; i <= 2 * k - 2; ++i) {
      if (sabotage && shift == 0 && i == 1) continue;  // orphan point 1
      gens.push_back(FinitePermutation::from_cycles(
          {{line_point(i + shift), line_point(i + 1 + shift),
            line_point(i + 2 + shift)}}));
    }
  }
  std::vector<Point> window = support_union(gens);
  PermGroup group(window, gens);
  BigUInt expected = verify_detail::half_factorial(4 * k);
  std::ostringstream w;
  w << "order=" << group.order();
  rep.add_check("the shifted consecutive 3-cycles generate the alternating "
                "group of the 4k-point window",
                (std::int64_t)window.size() == 4 * k &&
                    group.order() == expected,
                w.str());
  if (!sabotage) {
    GeneratedClass cls = classify_generated(gens);
    rep.add_check("the generated class is the alternating group",
                  cls == GeneratedClass::contains_alt_only, to_string(cls));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Membership decomposition round-trip on random samples.

inline Report verify_decomposition(int n, int samples,
                                   std::uint64_t seed = 20240817) {
  if (n < 2) fail(errc::invalid_argument, "need n >= 2");
  if (samples < 1) fail(errc::invalid_argument, "need at least one sample");
  Report rep;
  rep.claim = "decomposition";
  rep.add_param("n", n);
  rep.add_param("samples", samples);
  rep.add_param("seed", (std::int64_t)seed);

  std::mt19937_64 rng(seed);
  auto pick = [&](std::int64_t bound) {
    return (std::int64_t)(rng() % (std::uint64_t)bound);
  };

  bool member_ok = true, parity_ok = true, recompose_ok = true;
  std::string member_w, parity_w, recompose_w;
  for (int s = 0; s < samples; ++s) {
    // Random diagonal descriptor with a valid twist assignment.
    std::vector<std::int64_t> c;
    for (int i = 0; i < n - 1; ++i) c.push_back(1 + pick(4));
    bool alt_allowed = [&] {
      int odd = 0;
      for (auto v : c) odd += (int)(v % 2 != 0);
      return odd <= 1;
    }();
    SymType type = (alt_allowed && pick(2) == 0) ? SymType::alt : SymType::fsym;
    std::vector<Twist> twists;
    if (type == SymType::alt && pick(2) == 0)
      for (int i = 0; i < n - 1; ++i)
        twists.push_back(pick(2) == 0 ? Twist::swap_pair : Twist::trivial);
    SubgroupDescriptor desc = make_diagonal_descriptor(n, c, type, twists);

    // Random finitary part times a random generator word.
    std::vector<Point> window;
    for (std::int64_t i = 1; i <= 6; ++i) window.push_back(ray_point(1, i));
    for (std::int64_t i = 0; i < 6; ++i) {
      std::int64_t a = pick(6), b = pick(6);
      if (a != b) std::swap(window[(std::size_t)a], window[(std::size_t)b]);
    }
    std::map<Point, Point> shuffled;
    for (std::int64_t i = 1; i <= 6; ++i)
      shuffled[ray_point(1, i)] = window[(std::size_t)i - 1];
    FinitePermutation sigma = FinitePermutation::from_entries(shuffled);

    std::vector<HoughtonElement> gens = desc_generators(desc);
    HoughtonElement g = he_from_perm(n, sigma);
    for (int t = 0; t < 3; ++t) {
      std::int64_t which = pick((std::int64_t)gens.size());
      std::int64_t e = pick(5) - 2;
      g = he_mul(g, he_pow(gens[(std::size_t)which], e));
    }

    bool expect = type == SymType::fsym || fp_parity(sigma) == Parity::even;
    bool got = desc_membership(desc, g);
    if (got != expect && member_ok) {
      member_ok = false;
      member_w = "sample " + std::to_string(s);
    }
    std::optional<FinitePermutation> residual = desc_residual(desc, g);
    if (!residual) {
      if (member_ok) {
        member_ok = false;
        member_w = "sample " + std::to_string(s) + ": residual missing";
      }
      continue;
    }
    // For alt descriptors reordering corrections are even, so the residual
    // carries exactly the sampled finitary parity; fsym gives no guarantee.
    if (type == SymType::alt &&
        fp_parity(*residual) != fp_parity(sigma) && parity_ok) {
      parity_ok = false;
      parity_w = "sample " + std::to_string(s);
    }
    // Recompose: residual times the generator word with the solved exponents.
    TranslationVector v = he_pi(g);
    LatRow row(v.begin(), v.end());
    std::optional<std::vector<std::int64_t>> coords =
        lat_solve_coords(desc.lattice, row);
    if (!coords) {
      if (recompose_ok) {
        recompose_ok = false;
        recompose_w = "sample " + std::to_string(s) + ": no coordinates";
      }
      continue;
    }
    HoughtonElement word = he_identity(n);
    for (std::size_t i = 0; i < coords->size(); ++i)
      word = he_mul(word, he_pow(gens[i], (*coords)[i]));
    HoughtonElement back = he_mul(he_from_perm(n, *residual), word);
    if (!(back == g) && recompose_ok) {
      recompose_ok = false;
      recompose_w = "sample " + std::to_string(s);
    }
  }
  rep.add_check("membership matches the finitary-part parity prediction on "
                "every sample",
                member_ok, member_w);
  rep.add_check("for alt descriptors the residual's parity equals the "
                "sampled finitary part's parity",
                parity_ok, parity_w);
  rep.add_check("finitary part times solved generator word recomposes the "
                "element exactly",
                recompose_ok, recompose_w);

  // A lone odd finitary element under an fsym descriptor: member, and its
  // decomposition is the element itself.
  {
    std::vector<std::int64_t> twos(static_cast<std::size_t>(n - 1), 2);
    SubgroupDescriptor fs = make_diagonal_descriptor(n, twos, SymType::fsym);
    HoughtonElement odd = twist_element(n, Twist::swap_pair);
    std::optional<FinitePermutation> res = desc_residual(fs, odd);
    rep.add_check("an odd finitary element is a member of an fsym descriptor "
                  "with an odd residual",
                  desc_membership(fs, odd) && res &&
                      fp_parity(*res) == Parity::odd);
  }

  // An odd finitary element is rejected by every alt-type descriptor.
  {
    HoughtonElement odd = twist_element(n, Twist::swap_pair);
    std::vector<std::int64_t> ones(static_cast<std::size_t>(n - 1), 2);
    SubgroupDescriptor alt_desc =
        make_diagonal_descriptor(n, ones, SymType::alt);
    rep.add_check("the transposition of (1,1) and (1,2) is rejected by an "
                  "alt-type descriptor",
                  !desc_membership(alt_desc, odd));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The deterministic claim list for a full verification run.

struct ClaimRun {
  std::string name;
  ParamMap params;
  std::optional<SubgroupDescriptor> desc;
};

inline std::vector<ClaimRun> default_claim_runs() {
  std::vector<ClaimRun> runs;
  runs.push_back({"lemma37", {{"k", 3}, {"fsym", 0}}, std::nullopt});
  runs.push_back({"lemma37", {{"k", 3}, {"fsym", 1}}, std::nullopt});
  runs.push_back({"exceptional_h2", {{"K", 12}}, std::nullopt});
  runs.push_back({"genofGc", {{"c2", 1}, {"c3", 2}}, std::nullopt});
  runs.push_back({"genofGc", {{"c2", 2}, {"c3", 2}}, std::nullopt});
  runs.push_back({"erratum_omega", {{"k", 8}}, std::nullopt});
  runs.push_back({"pcycle", {{"p", 2}, {"k", 8}}, std::nullopt});
  runs.push_back({"pcycle", {{"p", 3}, {"k", 8}}, std::nullopt});
  SubgroupDescriptor alt_desc;
  alt_desc.n = 3;
  alt_desc.lattice = lat_make(2, {{1, 1}, {1, -1}});
  alt_desc.sym_type = SymType::alt;
  SubgroupDescriptor fsym_desc = alt_desc;
  fsym_desc.sym_type = SymType::fsym;
  runs.push_back({"prop6", {}, alt_desc});
  runs.push_back({"prop6", {}, fsym_desc});
  return runs;
}

}  // namespace houghton
