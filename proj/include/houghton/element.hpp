// Exact arithmetic for eventually-translation bijections of X_n.
//
// An element stores its ambient n, one translation amount per ray, and a
// finite exception table holding exactly the points whose image differs
// from the background translation (i, m) -> (i, m + s_i).  Construction
// validates bijectivity, so every value of this type is a genuine group
// element; products and inverses stay canonical by construction.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "houghton/errors.hpp"
#include "houghton/perm.hpp"
#include "houghton/point.hpp"

namespace houghton {

using TranslationVector = std::vector<std::int64_t>;  // (v_2, ..., v_n)

class HoughtonElement {
 public:
  // Identity of the ambient group over X_n.
  explicit HoughtonElement(int n) : n_(n), shifts_(static_cast<size_t>(n), 0) {
    if (n < 2) fail(errc::invalid_argument, "ambient n must be >= 2");
  }

  static HoughtonElement from_parts(int n, std::vector<std::int64_t> shifts,
                                    const std::map<Point, Point>& raw_table) {
    HoughtonElement g(n);
    if (shifts.size() != static_cast<std::size_t>(n))
      fail(errc::invalid_argument, "expected one shift per ray");
    g.shifts_ = std::move(shifts);
    for (const auto& [k, v] : raw_table) {
      g.check_point(k);
      g.check_point(v);
      if (v != g.background(k)) g.table_.emplace(k, v);
    }
    g.check_valid();
    return g;
  }

  int n() const { return n_; }
  const std::vector<std::int64_t>& shifts() const { return shifts_; }
  const std::map<Point, Point>& table() const { return table_; }

  bool is_identity() const {
    for (auto s : shifts_)
      if (s != 0) return false;
    return table_.empty();
  }

  Point eval(const Point& x) const {
    check_point(x);
    auto it = table_.find(x);
    if (it != table_.end()) return it->second;
    Point y = background(x);
    if (y.index < 1) fail(errc::internal, "background image fell off the ray");
    return y;
  }

  friend bool operator==(const HoughtonElement&,
                         const HoughtonElement&) = default;

 private:
  Point background(const Point& x) const {
    return Point{x.ray, x.index + shifts_[static_cast<size_t>(x.ray - 1)]};
  }

  void check_point(const Point& p) const {
    if (is_line(p))
      fail(errc::domain_mismatch, "line-mode point in a ray-domain element");
    if (p.ray < 1 || p.ray > n_)
      fail(errc::ambient_mismatch,
           "point " + houghton::to_string(p) + " outside X_" +
               std::to_string(n_));
    if (p.index < 1) fail(errc::invalid_argument, "ray index must be >= 1");
  }

  void check_valid() const {
    std::int64_t total = std::accumulate(shifts_.begin(), shifts_.end(),
                                         std::int64_t{0});
    if (total != 0)
      fail(errc::invalid_argument, "ray shifts must sum to zero");
    std::set<Point> range;
    for (const auto& [k, v] : table_) {
      if (!range.insert(v).second)
        fail(errc::invalid_argument,
             "point " + houghton::to_string(v) + " has two preimages");
    }
    for (int ray = 1; ray <= n_; ++ray) {
      std::int64_t s = shifts_[static_cast<size_t>(ray - 1)];
      // Points whose background image would leave the ray need an entry...
      for (std::int64_t m = 1; m + s < 1; ++m)
        if (table_.count(Point{ray, m}) == 0)
          fail(errc::invalid_argument,
               "no image for " + houghton::to_string(Point{ray, m}));
      // ...and points without a background preimage must be table images.
      for (std::int64_t m = 1; m - s < 1; ++m)
        if (range.count(Point{ray, m}) == 0)
          fail(errc::invalid_argument,
               "no preimage for " + houghton::to_string(Point{ray, m}));
    }
    // Table images must not collide with background images of other points.
    for (const Point& v : range) {
      Point pre{v.ray, v.index - shifts_[static_cast<size_t>(v.ray - 1)]};
      if (pre.index >= 1 && table_.count(pre) == 0)
        fail(errc::invalid_argument,
             "point " + houghton::to_string(v) + " is covered twice");
    }
  }

  int n_;
  std::vector<std::int64_t> shifts_;
  std::map<Point, Point> table_;

  friend HoughtonElement he_mul(const HoughtonElement&, const HoughtonElement&);
  friend HoughtonElement he_inv(const HoughtonElement&);
};

inline HoughtonElement he_identity(int n) { return HoughtonElement(n); }

// The standard generator g_k: translation up ray 1, down ray k, with the
// single exception (k, 1) -> (1, 1).
inline HoughtonElement he_generator(int n, int k) {
  if (n < 2) fail(errc::invalid_argument, "ambient n must be >= 2");
  if (k < 2 || k > n)
    fail(errc::invalid_argument, "generator index must lie in 2..n");
  std::vector<std::int64_t> s(static_cast<size_t>(n), 0);
  s[0] = 1;
  s[static_cast<size_t>(k - 1)] = -1;
  std::map<Point, Point> t;
  t[ray_point(k, 1)] = ray_point(1, 1);
  return HoughtonElement::from_parts(n, std::move(s), t);
}

inline HoughtonElement he_mul(const HoughtonElement& g,
                              const HoughtonElement& h) {
  if (g.n() != h.n())
    fail(errc::ambient_mismatch, "product of elements over different n");
  HoughtonElement out(g.n());
  for (int i = 0; i < g.n(); ++i)
    out.shifts_[static_cast<size_t>(i)] =
        g.shifts()[static_cast<size_t>(i)] + h.shifts()[static_cast<size_t>(i)];

  // The composite can differ from its background only on the table of g or
  // on g-preimages of the table of h.
  std::set<Point> candidates;
  std::map<Point, Point> g_reverse;
  for (const auto& [k, v] : g.table()) {
    candidates.insert(k);
    g_reverse.emplace(v, k);
  }
  for (const auto& [k, v] : h.table()) {
    auto it = g_reverse.find(k);
    if (it != g_reverse.end()) {
      candidates.insert(it->second);
    } else {
      Point pre{k.ray,
                k.index - g.shifts()[static_cast<size_t>(k.ray - 1)]};
      if (pre.index >= 1) candidates.insert(pre);
      // Otherwise k has no background g-preimage, so its g-preimage sits in
      // the table of g and is already a candidate.
    }
  }
  for (const Point& x : candidates) {
    Point y = h.eval(g.eval(x));
    if (y != out.background(x)) out.table_.emplace(x, y);
  }
  out.check_valid();
  return out;
}

inline HoughtonElement he_inv(const HoughtonElement& g) {
  HoughtonElement out(g.n());
  for (int i = 0; i < g.n(); ++i)
    out.shifts_[static_cast<size_t>(i)] = -g.shifts()[static_cast<size_t>(i)];
  for (const auto& [k, v] : g.table()) out.table_.emplace(v, k);
  out.check_valid();
  return out;
}

inline HoughtonElement he_pow(const HoughtonElement& g, std::int64_t e) {
  if (e < 0) return he_pow(he_inv(g), -e);
  HoughtonElement acc = he_identity(g.n());
  HoughtonElement base = g;
  while (e > 0) {
    if (e & 1) acc = he_mul(acc, base);
    e >>= 1;
    if (e) base = he_mul(base, base);
  }
  return acc;
}

inline HoughtonElement he_commutator(const HoughtonElement& g,
                                     const HoughtonElement& h) {
  // [g, h] = g^-1 h^-1 g h.
  return he_mul(he_inv(g), he_mul(he_inv(h), he_mul(g, h)));
}

inline HoughtonElement he_conjugate(const HoughtonElement& g,
                                    const HoughtonElement& h) {
  // g^h = h^-1 g h.
  return he_mul(he_inv(h), he_mul(g, h));
}

// Ray translation amount along ray 1 (the common ray of all generators).
inline std::int64_t he_t1(const HoughtonElement& g) { return g.shifts()[0]; }

// Image in the translation quotient: (-s_2, ..., -s_n), so that each
// generator g_k maps to the standard basis vector e_{k-1}.
inline TranslationVector he_pi(const HoughtonElement& g) {
  TranslationVector v(static_cast<size_t>(g.n() - 1));
  for (int i = 2; i <= g.n(); ++i)
    v[static_cast<size_t>(i - 2)] = -g.shifts()[static_cast<size_t>(i - 1)];
  return v;
}

// Canonical preimage of v: the ordered product g_2^{d_2} ... g_n^{d_n}
// with d_j the components of v, taken in ascending j.
inline HoughtonElement he_canonical_preimage(int n,
                                             const TranslationVector& v) {
  if (v.size() != static_cast<std::size_t>(n - 1))
    fail(errc::ambient_mismatch, "translation vector of wrong dimension");
  HoughtonElement acc = he_identity(n);
  for (int j = 2; j <= n; ++j) {
    std::int64_t d = v[static_cast<size_t>(j - 2)];
    if (d != 0) acc = he_mul(acc, he_pow(he_generator(n, j), d));
  }
  return acc;
}

// An element with zero shifts is a finitely supported permutation.
inline bool he_is_fsym(const HoughtonElement& g) {
  for (auto s : g.shifts())
    if (s != 0) return false;
  return true;
}

inline FinitePermutation he_to_perm(const HoughtonElement& g) {
  if (!he_is_fsym(g))
    fail(errc::not_finitary, "element translates along a ray");
  return FinitePermutation::from_entries(g.table());
}

inline HoughtonElement he_from_perm(int n, const FinitePermutation& sigma) {
  if (sigma.mode() == 2)
    fail(errc::domain_mismatch, "cannot embed a line-mode permutation here");
  return HoughtonElement::from_parts(
      n, std::vector<std::int64_t>(static_cast<size_t>(n), 0),
      sigma.entries());
}

// Embeds a line-mode permutation into X_2 along the fixed bijection
// m >= 1 <-> (1, m), m <= 0 <-> (2, 1 - m).
inline HoughtonElement he_from_line_perm(const FinitePermutation& sigma) {
  if (sigma.mode() == 1)
    fail(errc::domain_mismatch, "expected a line-mode permutation");
  std::map<Point, Point> t;
  for (const auto& [k, v] : sigma.entries())
    t[line_embed(k.index)] = line_embed(v.index);
  return HoughtonElement::from_parts(2, {0, 0}, t);
}

// Splits g as (sigma, v) with sigma finitary, v the translation image, and
// sigma * (canonical preimage of v) = g exactly.
inline std::pair<FinitePermutation, TranslationVector> he_decompose(
    const HoughtonElement& g) {
  TranslationVector v = he_pi(g);
  HoughtonElement vhat = he_canonical_preimage(g.n(), v);
  HoughtonElement residue = he_mul(g, he_inv(vhat));
  if (!he_is_fsym(residue))
    fail(errc::internal, "decomposition residue is not finitary");
  return {he_to_perm(residue), v};
}

inline Parity he_parity_if_fsym(const HoughtonElement& g) {
  return fp_parity(he_to_perm(g));
}

// Conjugate of a finitary permutation by a group element: sigma^g maps
// (x)g to (x sigma)g, so its support is the g-image of the support.
inline FinitePermutation he_conj_perm(const FinitePermutation& sigma,
                                      const HoughtonElement& g) {
  if (sigma.mode() == 2)
    fail(errc::domain_mismatch, "ray-mode permutation required");
  std::map<Point, Point> m;
  for (const auto& [k, v] : sigma.entries()) m[g.eval(k)] = g.eval(v);
  return FinitePermutation::from_entries(m);
}

struct OrbitReport {
  std::uint64_t infinite_orbit_count = 0;
  std::vector<Cycle> finite_cycles;  // non-fixed finite orbits, canonical order
};

// Classifies the orbits of g.  The infinite-orbit count equals the total
// upward translation sum(max(s_i, 0)); finite non-fixed cycles are found by
// tracing orbits through the exception table, since any such cycle must pass
// through it.
inline OrbitReport he_orbits(const HoughtonElement& g) {
  OrbitReport report;
  for (auto s : g.shifts())
    if (s > 0) report.infinite_orbit_count += static_cast<std::uint64_t>(s);

  std::vector<std::int64_t> max_index(static_cast<size_t>(g.n()), 0);
  for (const auto& [k, v] : g.table()) {
    auto& mk = max_index[static_cast<size_t>(k.ray - 1)];
    auto& mv = max_index[static_cast<size_t>(v.ray - 1)];
    if (k.index > mk) mk = k.index;
    if (v.index > mv) mv = v.index;
  }

  std::set<Point> visited;
  std::set<Point> starts;
  for (const auto& [k, v] : g.table()) starts.insert(k);
  for (const Point& start : starts) {
    if (visited.count(start)) continue;
    Cycle path{start};
    visited.insert(start);
    Point p = g.eval(start);
    while (p != start) {
      std::int64_t s = g.shifts()[static_cast<size_t>(p.ray - 1)];
      if (g.table().count(p) == 0 && s > 0 &&
          p.index > max_index[static_cast<size_t>(p.ray - 1)]) {
        break;  // escapes upward through untouched background: infinite
      }
      if (visited.count(p)) {
        // Merged into an earlier forward trace.  A closed cycle cannot be
        // entered from outside, so that trace was an infinite orbit and
        // this start lies upstream on it.
        break;
      }
      path.push_back(p);
      visited.insert(p);
      p = g.eval(p);
    }
    if (p == start && path.size() >= 2) {
      // Rotate so the cycle starts at its least point.
      auto least = std::min_element(path.begin(), path.end());
      std::rotate(path.begin(), least, path.end());
      report.finite_cycles.push_back(std::move(path));
    }
  }
  std::sort(report.finite_cycles.begin(), report.finite_cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a[0] < b[0]; });
  return report;
}

inline std::string to_string(const HoughtonElement& g) {
  std::ostringstream os;
  os << "H[n=" << g.n() << "; s=(";
  for (int i = 0; i < g.n(); ++i) {
    if (i) os << ',';
    os << g.shifts()[static_cast<size_t>(i)];
  }
  os << "); {";
  bool first = true;
  for (const auto& [k, v] : g.table()) {
    if (!first) os << ',';
    first = false;
    os << houghton::to_string(k) << "->" << houghton::to_string(v);
  }
  os << "}]";
  return os.str();
}

}  // namespace houghton
