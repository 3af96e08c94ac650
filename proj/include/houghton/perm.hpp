// Finitely supported permutations with exact cycle and parity calculus.
//
// A FinitePermutation stores only the points it moves (canonical form: no
// entry maps a point to itself).  All operations use right actions, so the
// product a*b means "apply a, then b".  One permutation value lives either
// in ray mode (points of some X_n) or in line mode (points of Z); the two
// modes never mix inside a single value or a single product.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "houghton/errors.hpp"
#include "houghton/point.hpp"

namespace houghton {

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) {
  return a == b ? Parity::even : Parity::odd;
}

using Cycle = std::vector<Point>;

class FinitePermutation {
 public:
  FinitePermutation() = default;

  // Builds from an explicit point map.  Fixed entries are stripped; the
  // remaining entries must form a bijection of their domain onto itself.
  static FinitePermutation from_entries(const std::map<Point, Point>& raw) {
    FinitePermutation p;
    for (const auto& [k, v] : raw) {
      if (k != v) p.entries_.emplace(k, v);
    }
    p.check_valid();
    return p;
  }

  static FinitePermutation from_cycles(const std::vector<Cycle>& cycles) {
    std::map<Point, Point> m;
    std::set<Point> seen;
    for (const Cycle& c : cycles) {
      if (c.size() < 2)
        fail(errc::malformed_cycles, "cycle of length < 2");
      for (const Point& p : c) {
        if (!seen.insert(p).second)
          fail(errc::malformed_cycles,
               "point " + houghton::to_string(p) + " appears twice");
      }
      for (std::size_t i = 0; i < c.size(); ++i)
        m[c[i]] = c[(i + 1) % c.size()];
    }
    return from_entries(m);
  }

  bool is_identity() const { return entries_.empty(); }

  std::size_t support_size() const { return entries_.size(); }

  std::vector<Point> support() const {
    std::vector<Point> s;
    s.reserve(entries_.size());
    for (const auto& [k, v] : entries_) s.push_back(k);
    return s;
  }

  bool moves(const Point& p) const { return entries_.count(p) != 0; }

  // 0 = empty (compatible with either mode), 1 = ray mode, 2 = line mode.
  int mode() const {
    if (entries_.empty()) return 0;
    return is_line(entries_.begin()->first) ? 2 : 1;
  }

  Point apply(const Point& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? p : it->second;
  }

  Point apply_inverse(const Point& p) const {
    for (const auto& [k, v] : entries_)
      if (v == p) return k;
    return p;
  }

  friend bool operator==(const FinitePermutation&,
                         const FinitePermutation&) = default;
  friend auto operator<=>(const FinitePermutation&,
                          const FinitePermutation&) = default;

  const std::map<Point, Point>& entries() const { return entries_; }

 private:
  void check_valid() const {
    std::set<Point> range;
    int m = 0;
    for (const auto& [k, v] : entries_) {
      int km = is_line(k) ? 2 : 1;
      int vm = is_line(v) ? 2 : 1;
      if (km != vm || (m != 0 && km != m))
        fail(errc::domain_mismatch,
             "ray-mode and line-mode points in one permutation");
      m = km;
      if (!range.insert(v).second)
        fail(errc::malformed_cycles,
             "point " + houghton::to_string(v) + " has two preimages");
      if (entries_.count(v) == 0)
        fail(errc::malformed_cycles,
             "support not closed at " + houghton::to_string(v));
    }
  }

  std::map<Point, Point> entries_;
};

inline void require_compatible(const FinitePermutation& a,
                               const FinitePermutation& b) {
  int ma = a.mode(), mb = b.mode();
  if (ma != 0 && mb != 0 && ma != mb)
    fail(errc::domain_mismatch,
         "cannot combine a ray-mode and a line-mode permutation");
}

// Right-action product: apply a, then b.
inline FinitePermutation fp_compose(const FinitePermutation& a,
                                    const FinitePermutation& b) {
  require_compatible(a, b);
  std::map<Point, Point> m;
  for (const auto& [k, v] : a.entries()) m[k] = b.apply(v);
  for (const auto& [k, v] : b.entries())
    if (!a.moves(k)) m[k] = v;
  return FinitePermutation::from_entries(m);
}

inline FinitePermutation fp_inverse(const FinitePermutation& a) {
  std::map<Point, Point> m;
  for (const auto& [k, v] : a.entries()) m[v] = k;
  return FinitePermutation::from_entries(m);
}

inline FinitePermutation fp_conjugate(const FinitePermutation& g,
                                      const FinitePermutation& h) {
  // h^-1 g h; its support is the h-image of the support of g.
  return fp_compose(fp_inverse(h), fp_compose(g, h));
}

inline FinitePermutation fp_commutator(const FinitePermutation& g,
                                       const FinitePermutation& h) {
  // [g, h] = g^-1 h^-1 g h.
  return fp_compose(fp_inverse(g),
                    fp_compose(fp_inverse(h), fp_compose(g, h)));
}

// Cycles in canonical order: each cycle starts at its least point and the
// cycles are sorted by starting point.
inline std::vector<Cycle> fp_cycles(const FinitePermutation& a) {
  std::vector<Cycle> out;
  std::set<Point> visited;
  for (const auto& [start, first] : a.entries()) {
    if (visited.count(start)) continue;
    Cycle c{start};
    visited.insert(start);
    for (Point p = first; p != start; p = a.apply(p)) {
      c.push_back(p);
      visited.insert(p);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline Parity fp_parity(const FinitePermutation& a) {
  std::size_t cycles = fp_cycles(a).size();
  return (a.support_size() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

inline FinitePermutation fp_pow(const FinitePermutation& a, std::int64_t e) {
  std::map<Point, Point> m;
  for (const Cycle& c : fp_cycles(a)) {
    std::int64_t len = static_cast<std::int64_t>(c.size());
    std::int64_t r = ((e % len) + len) % len;
    if (r == 0) continue;
    for (std::size_t i = 0; i < c.size(); ++i)
      m[c[i]] = c[(i + static_cast<std::size_t>(r)) % c.size()];
  }
  return FinitePermutation::from_entries(m);
}

// Order of the permutation: least common multiple of its cycle lengths.
inline std::uint64_t fp_order(const FinitePermutation& a) {
  std::uint64_t ord = 1;
  for (const Cycle& c : fp_cycles(a)) {
    std::uint64_t len = c.size();
    std::uint64_t g = std::gcd(ord, len);
    if (ord / g > (std::uint64_t{1} << 62) / len)
      fail(errc::unsupported, "permutation order exceeds 2^62");
    ord = ord / g * len;
  }
  return ord;
}

// Line-mode conjugation by the translation z -> z+c: support moves up by c.
inline FinitePermutation fp_shift(const FinitePermutation& a, std::int64_t c) {
  if (a.mode() == 1)
    fail(errc::domain_mismatch, "fp_shift requires a line-mode permutation");
  std::map<Point, Point> m;
  for (const auto& [k, v] : a.entries())
    m[line_point(k.index + c)] = line_point(v.index + c);
  return FinitePermutation::from_entries(m);
}

// Commutator with a translation: [a, t^k] = a^-1 * (t^-k a t^k).
inline FinitePermutation fp_comm_with_shift(const FinitePermutation& a,
                                            std::int64_t k) {
  return fp_compose(fp_inverse(a), fp_shift(a, k));
}

inline std::string to_string(const FinitePermutation& a) {
  if (a.is_identity()) return "()";
  std::ostringstream os;
  for (const Cycle& c : fp_cycles(a)) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << houghton::to_string(c[i]);
    }
    os << ')';
  }
  return os.str();
}

}  // namespace houghton
