// Finite-index subgroup descriptors and their classification invariants:
// index, minimal generating number, abelianization, membership, enumeration
// and normal forms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/errors.hpp"
#include "houghton/format.hpp"
#include "houghton/lattice.hpp"
#include "houghton/perm.hpp"

namespace houghton {

enum class SymType { fsym, alt };

// A twist composes the corresponding translation generator with the
// transposition ((1,1),(1,2)).
enum class Twist { trivial, swap_pair };

struct SubgroupDescriptor {
  int n = 2;
  LatticeBasis lattice;       // rows spanning a sublattice of Z^{n-1}
  SymType sym_type = SymType::fsym;
  std::vector<Twist> twists;  // empty, or one entry per ray axis 2..n
};

struct ValidationResult {
  bool ok = true;
  std::string violation;  // empty when ok
};

struct ClassReport {
  BigInt index;
  int d = 0;
  std::string abelianization;
  std::string normal_form;
};

inline std::string to_string(SymType t) {
  return t == SymType::fsym ? "fsym" : "alt";
}

inline std::string to_string(Twist t) {
  return t == Twist::trivial ? "trivial" : "swap";
}

inline SymType parse_sym_type(const std::string& s) {
  if (s == "fsym") return SymType::fsym;
  if (s == "alt") return SymType::alt;
  fail(errc::parse_error, "unknown subgroup type '" + s + "'");
}

// Accepts "swap,trivial" or "(swap,trivial)".
inline std::vector<Twist> parse_twists(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      fail(errc::parse_error, "unbalanced parentheses in twist list");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Twist> out;
  std::string item;
  std::istringstream is(body);
  while (std::getline(is, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item == "trivial")
      out.push_back(Twist::trivial);
    else if (item == "swap")
      out.push_back(Twist::swap_pair);
    else
      fail(errc::parse_error, "unknown twist '" + item + "'");
  }
  if (out.empty()) fail(errc::parse_error, "empty twist list");
  return out;
}

inline std::string format_twists(const std::vector<Twist>& tw) {
  std::string s = "(";
  for (std::size_t i = 0; i < tw.size(); ++i) {
    if (i) s += ',';
    s += to_string(tw[i]);
  }
  return s + ")";
}

inline std::string format_descriptor(const SubgroupDescriptor& d) {
  std::string s = "n=" + std::to_string(d.n) + "; L=" +
                  format_lattice(d.lattice) + "; type=" +
                  to_string(d.sym_type);
  if (!d.twists.empty()) s += "; eps=" + format_twists(d.twists);
  return s;
}

// Descriptor text is "key=value" fields separated by ';'.  Lattice rows also
// use ';' internally, so a segment without '=' continues the previous field.
inline SubgroupDescriptor parse_descriptor(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> fields;
  std::string segment;
  std::istringstream is(text);
  while (std::getline(is, segment, ';')) {
    while (!segment.empty() && segment.front() == ' ')
      segment.erase(segment.begin());
    while (!segment.empty() && segment.back() == ' ') segment.pop_back();
    if (segment.empty()) continue;
    auto eq = segment.find('=');
    if (eq == std::string::npos) {
      if (fields.empty())
        fail(errc::parse_error, "descriptor must start with a key=value field");
      fields.back().second += ";" + segment;
    } else {
      fields.emplace_back(segment.substr(0, eq), segment.substr(eq + 1));
    }
  }
  SubgroupDescriptor d;
  bool have_n = false, have_lattice = false, have_type = false;
  for (const auto& [key, value] : fields) {
    if (key == "n") {
      d.n = std::stoi(value);
      have_n = true;
    } else if (key == "L") {
      d.lattice = parse_lattice(value);
      have_lattice = true;
    } else if (key == "type") {
      d.sym_type = parse_sym_type(value);
      have_type = true;
    } else if (key == "eps") {
      d.twists = parse_twists(value);
    } else {
      fail(errc::parse_error, "unknown descriptor field '" + key + "'");
    }
  }
  if (!have_n || !have_lattice || !have_type)
    fail(errc::parse_error, "descriptor needs n=, L= and type= fields");
  return d;
}

// ---------------------------------------------------------------------------
// Validation.

inline ValidationResult desc_validate(const SubgroupDescriptor& d) {
  auto bad = [](std::string why) { return ValidationResult{false, std::move(why)}; };
  if (d.n < 2) return bad("n must be at least 2");
  if (d.lattice.dim != d.n - 1)
    return bad("lattice dimension must equal n-1");
  if (d.lattice.rows.empty()) return bad("lattice needs at least one row");
  auto index = lat_index(d.lattice);
  if (!index) return bad("lattice does not have finite index in Z^(n-1)");
  if (d.sym_type == SymType::alt && lat_has_odd_pair(d.lattice))
    return bad(
        "alt type requires the parity form to vanish on the lattice "
        "(no odd pair)");
  if (!d.twists.empty()) {
    if (d.sym_type != SymType::alt)
      return bad("twists are only defined for alt type");
    if ((int)d.twists.size() != d.n - 1)
      return bad("twist vector must have n-1 entries");
    if (!lat_diagonal_form(d.lattice))
      return bad("twists are only defined for diagonal lattices");
  }
  return ValidationResult{};
}

inline void require_valid(const SubgroupDescriptor& d) {
  auto v = desc_validate(d);
  if (!v.ok) fail(errc::invalid_argument, "invalid descriptor: " + v.violation);
}

// ---------------------------------------------------------------------------
// Generators of the described subgroup.

inline HoughtonElement twist_element(int n, Twist t) {
  if (t == Twist::trivial) return he_identity(n);
  auto sw = FinitePermutation::from_cycles(
      {{ray_point(1, 1), ray_point(1, 2)}});
  return he_from_perm(n, sw);
}

// Diagonal descriptors are parametrized by axis multiples; returns them in
// axis order when the lattice is diagonal.
inline std::optional<std::vector<std::int64_t>> desc_diagonal(
    const SubgroupDescriptor& d) {
  return lat_diagonal_form(d.lattice);
}

// The translation-part generators h_2,...: for diagonal lattices the twisted
// axis generators eps_i * g_i^{c_i}; otherwise the canonical preimages of the
// rows exactly as written (for alt type the rows are part of the data: a
// different basis of the same lattice can describe a different subgroup).
inline std::vector<HoughtonElement> desc_generators(
    const SubgroupDescriptor& d) {
  require_valid(d);
  std::vector<HoughtonElement> out;
  if (auto diag = desc_diagonal(d)) {
    for (int axis = 0; axis < d.n - 1; ++axis) {
      TranslationVector v(d.n - 1, 0);
      v[axis] = (*diag)[axis];
      HoughtonElement gen = he_canonical_preimage(d.n, v);
      if (!d.twists.empty() && d.twists[axis] == Twist::swap_pair)
        gen = he_mul(twist_element(d.n, Twist::swap_pair), gen);
      out.push_back(gen);
    }
  } else {
    for (const auto& row : d.lattice.rows) {
      TranslationVector v(row.begin(), row.end());
      out.push_back(he_canonical_preimage(d.n, v));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Membership.

// Residual finitary part of g after dividing off the descriptor's
// translation generators; nullopt when pi(g) is not in the lattice.
inline std::optional<FinitePermutation> desc_residual(
    const SubgroupDescriptor& d, const HoughtonElement& g) {
  if (g.n() != d.n)
    fail(errc::ambient_mismatch, "element and descriptor disagree on n");
  TranslationVector v = he_pi(g);
  HoughtonElement w = he_identity(d.n);
  if (auto diag = desc_diagonal(d)) {
    std::vector<HoughtonElement> gens = desc_generators(d);
    for (int axis = 0; axis < d.n - 1; ++axis) {
      std::int64_t c = (*diag)[axis];
      if (v[axis] % c != 0) return std::nullopt;
      w = he_mul(w, he_pow(gens[axis], v[axis] / c));
    }
  } else {
    std::vector<std::int64_t> vv(v.begin(), v.end());
    auto coords = lat_solve_coords(d.lattice, vv);
    if (!coords) return std::nullopt;
    std::vector<HoughtonElement> gens = desc_generators(d);
    for (std::size_t i = 0; i < gens.size(); ++i)
      w = he_mul(w, he_pow(gens[i], (*coords)[i]));
  }
  return he_to_perm(he_mul(g, he_inv(w)));
}

inline bool desc_membership(const SubgroupDescriptor& d,
                            const HoughtonElement& g) {
  require_valid(d);
  auto residual = desc_residual(d, g);
  if (!residual) return false;
  if (d.sym_type == SymType::fsym) return true;
  return fp_parity(*residual) == Parity::even;
}

// ---------------------------------------------------------------------------
// Invariants.

inline BigInt desc_index(const SubgroupDescriptor& d) {
  require_valid(d);
  BigInt idx = *lat_index(d.lattice);
  if (d.sym_type == SymType::alt) idx *= 2;
  return idx;
}

inline int desc_d(const SubgroupDescriptor& d) {
  require_valid(d);
  if (d.n == 2) return 2;
  if (d.sym_type == SymType::alt) return d.n - 1;
  return lat_has_odd_pair(d.lattice) ? d.n - 1 : d.n;
}

inline std::string desc_abelianization(const SubgroupDescriptor& d) {
  require_valid(d);
  int k = d.n - 1;
  std::string base = (k == 1) ? "Z" : "Z^" + std::to_string(k);
  bool extra_c2 =
      d.sym_type == SymType::fsym && !lat_has_odd_pair(d.lattice);
  return extra_c2 ? base + "xC2" : base;
}

// ---------------------------------------------------------------------------
// Enumeration of subgroups above a diagonal translation lattice.

inline SubgroupDescriptor make_diagonal_descriptor(
    int n, const std::vector<std::int64_t>& c, SymType type,
    std::vector<Twist> twists = {}) {
  if ((int)c.size() != n - 1)
    fail(errc::invalid_argument, "need n-1 diagonal entries");
  std::vector<LatRow> rows;
  for (int i = 0; i < n - 1; ++i) {
    if (c[i] < 1)
      fail(errc::invalid_argument, "diagonal entries must be positive");
    LatRow row(n - 1, 0);
    row[i] = c[i];
    rows.push_back(row);
  }
  SubgroupDescriptor d;
  d.n = n;
  d.lattice = lat_make(n - 1, rows);
  d.sym_type = type;
  d.twists = std::move(twists);
  return d;
}

// All finite-index subgroups whose translation lattice is the given diagonal
// lattice: one fsym subgroup always; 2^(n-1) twisted alt subgroups exactly
// when at most one c_i is odd.  Non-diagonal lattices are not enumerated.
inline std::vector<SubgroupDescriptor> desc_enumerate(
    int n, const std::vector<std::int64_t>& c) {
  if (n < 2) fail(errc::invalid_argument, "n must be at least 2");
  if ((int)c.size() != n - 1)
    fail(errc::invalid_argument, "need n-1 diagonal entries");
  int odd = 0;
  for (auto v : c) {
    if (v < 1) fail(errc::invalid_argument, "diagonal entries must be positive");
    if (v % 2 != 0) ++odd;
  }
  std::vector<SubgroupDescriptor> out;
  out.push_back(make_diagonal_descriptor(n, c, SymType::fsym));
  if (odd >= 2) return out;
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    std::vector<Twist> tw;
    for (int i = 0; i < n - 1; ++i)
      tw.push_back((mask >> i) & 1 ? Twist::swap_pair : Twist::trivial);
    out.push_back(make_diagonal_descriptor(n, c, SymType::alt, tw));
  }
  return out;
}

// An element contained in exactly one of the two subgroups.
inline HoughtonElement desc_distinguishing_witness(
    const SubgroupDescriptor& a, const SubgroupDescriptor& b) {
  std::vector<HoughtonElement> candidates;
  candidates.push_back(twist_element(a.n, Twist::swap_pair));
  for (const auto& g : desc_generators(a)) candidates.push_back(g);
  if (b.n == a.n)
    for (const auto& g : desc_generators(b)) candidates.push_back(g);
  for (const auto& g : candidates)
    if (desc_membership(a, g) != desc_membership(b, g)) return g;
  fail(errc::internal, "no membership witness separates the two descriptors");
}

// ---------------------------------------------------------------------------
// Normal forms.

struct NormalizeResult {
  SubgroupDescriptor canonical;
  std::string normal_form;
  bool exceptional = false;  // the n=2 twisted subgroup with c=1
};

inline NormalizeResult desc_normalize(const SubgroupDescriptor& d) {
  require_valid(d);
  NormalizeResult res;
  if (auto diag = desc_diagonal(d)) {
    std::vector<std::int64_t> c = *diag;
    bool twisted = false;
    for (auto t : d.twists) twisted = twisted || t == Twist::swap_pair;
    if (d.n == 2 && d.sym_type == SymType::alt && twisted && c[0] == 1) {
      // The one subgroup not isomorphic to any untwisted model.
      res.canonical = d;
      res.exceptional = true;
      res.normal_form = format_descriptor(d) +
                        " [exceptional: isomorphism type unknown]";
      return res;
    }
    // Twists never change the isomorphism type elsewhere; sorting the
    // diagonal realizes a ray relabeling.
    std::sort(c.begin(), c.end());
    res.canonical = make_diagonal_descriptor(d.n, c, d.sym_type);
    res.normal_form = format_descriptor(res.canonical);
    return res;
  }
  SubgroupDescriptor canon = d;
  if (d.sym_type == SymType::fsym) {
    // Only the lattice matters: present it by its Hermite normal form.
    HermiteForm h = lat_hnf(d.lattice);
    std::vector<LatRow> rows;
    for (int i = 0; i < h.rank; ++i) rows.push_back(h.hnf[i]);
    canon.lattice = lat_make(d.lattice.dim, rows);
  } else {
    // The rows are coset data; only reordering is sound.
    std::vector<LatRow> rows = d.lattice.rows;
    std::sort(rows.begin(), rows.end());
    canon.lattice = lat_make(d.lattice.dim, rows);
  }
  res.canonical = canon;
  res.normal_form = format_descriptor(canon);
  return res;
}

inline ClassReport classify_descriptor(const SubgroupDescriptor& d) {
  ClassReport r;
  r.index = desc_index(d);
  r.d = desc_d(d);
  r.abelianization = desc_abelianization(d);
  r.normal_form = desc_normalize(d).normal_form;
  return r;
}

}  // namespace houghton
