// Finite permutation group engine: deterministic stabilizer chains for
// exact orders and membership, breadth-first enumeration for small groups,
// and detection of alternating / symmetric generation on a window.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "houghton/errors.hpp"
#include "houghton/perm.hpp"

namespace houghton {

using BigUInt = boost::multiprecision::cpp_int;

// Union of the supports of a family of permutations, sorted ascending.
inline std::vector<Point> support_union(
    const std::vector<FinitePermutation>& gens) {
  std::set<Point> pts;
  for (const auto& g : gens)
    for (const auto& [k, v] : g.entries()) pts.insert(k);
  return std::vector<Point>(pts.begin(), pts.end());
}

// Stabilizer chain over a fixed finite window via the deterministic
// Schreier-Sims procedure.  Base points are chosen in window order, orbits
// are grown breadth-first with generators in a fixed order, so identical
// input always yields an identical chain.
class PermGroup {
 public:
  PermGroup(std::vector<Point> window,
            const std::vector<FinitePermutation>& gens)
      : window_(std::move(window)) {
    std::sort(window_.begin(), window_.end());
    window_.erase(std::unique(window_.begin(), window_.end()), window_.end());
    n_ = static_cast<int>(window_.size());
    for (int i = 0; i < n_; ++i) index_[window_[static_cast<size_t>(i)]] = i;
    for (const auto& g : gens) {
      Vec v = to_vec(g);
      if (!is_id(v)) sgens_.push_back(std::move(v));
    }
    for (const auto& s : sgens_) ensure_base_covers(s);
    for (int i = static_cast<int>(base_.size()) - 1; i >= 0; --i) complete_level(i);
  }

  const std::vector<Point>& window() const { return window_; }

  BigUInt order() const {
    BigUInt o = 1;
    for (const auto& t : trans_) o *= static_cast<unsigned>(t.size());
    return o;
  }

  bool contains(const FinitePermutation& g) const {
    for (const auto& [k, v] : g.entries())
      if (!index_.count(k)) return false;
    Vec v = to_vec(g);
    auto [res, lev] = strip(v, 0);
    (void)lev;
    return is_id(res);
  }

 private:
  using Vec = std::vector<int>;  // images of window slots

  Vec identity() const {
    Vec v(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<size_t>(i)] = i;
    return v;
  }
  static bool is_id(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != static_cast<int>(i)) return false;
    return true;
  }
  static Vec mul(const Vec& a, const Vec& b) {  // apply a, then b
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      c[i] = b[static_cast<size_t>(a[i])];
    return c;
  }
  static Vec inv(const Vec& a) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      c[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return c;
  }

  Vec to_vec(const FinitePermutation& g) const {
    Vec v = identity();
    for (const auto& [k, val] : g.entries()) {
      auto ik = index_.find(k);
      auto iv = index_.find(val);
      if (ik == index_.end() || iv == index_.end())
        fail(errc::window_violation, "permutation leaves the window");
      v[static_cast<size_t>(ik->second)] = iv->second;
    }
    return v;
  }

  void ensure_base_covers(const Vec& g) {
    for (int b : base_)
      if (g[static_cast<size_t>(b)] != b) return;
    for (int i = 0; i < n_; ++i)
      if (g[static_cast<size_t>(i)] != i) {
        base_.push_back(i);
        trans_.emplace_back();
        return;
      }
  }

  std::vector<Vec> level_gens(int lev) const {
    std::vector<Vec> out;
    for (const auto& s : sgens_) {
      bool fixes = true;
      for (int i = 0; i < lev; ++i)
        if (s[static_cast<size_t>(base_[static_cast<size_t>(i)])] !=
            base_[static_cast<size_t>(i)]) {
          fixes = false;
          break;
        }
      if (fixes) out.push_back(s);
    }
    return out;
  }

  void rebuild_orbit(int lev, const std::vector<Vec>& gens) {
    auto& t = trans_[static_cast<size_t>(lev)];
    t.clear();
    int b = base_[static_cast<size_t>(lev)];
    t[b] = identity();
    std::queue<int> q;
    q.push(b);
    while (!q.empty()) {
      int p = q.front();
      q.pop();
      for (const auto& g : gens) {
        int img = g[static_cast<size_t>(p)];
        if (!t.count(img)) {
          t[img] = mul(t[p], g);
          q.push(img);
        }
      }
    }
  }

  std::pair<Vec, int> strip(Vec g, int from) const {
    for (int i = from; i < static_cast<int>(base_.size()); ++i) {
      int img = g[static_cast<size_t>(base_[static_cast<size_t>(i)])];
      auto it = trans_[static_cast<size_t>(i)].find(img);
      if (it == trans_[static_cast<size_t>(i)].end()) return {g, i};
      g = mul(g, inv(it->second));
    }
    return {g, static_cast<int>(base_.size())};
  }

  // Makes level `lev` consistent: recompute its orbit, then sift every
  // Schreier generator through the deeper levels, extending the chain
  // whenever a residue survives.
  void complete_level(int lev) {
    std::vector<Vec> gens = level_gens(lev);
    rebuild_orbit(lev, gens);
    // Snapshot the orbit: it only depends on gens, which stay fixed here.
    // Deeper recursion can grow trans_, so index it afresh on every access.
    std::vector<int> orbit;
    for (const auto& [p, u] : trans_[static_cast<size_t>(lev)]) orbit.push_back(p);
    for (int p : orbit) {
      for (const auto& s : gens) {
        Vec u = trans_[static_cast<size_t>(lev)].at(p);
        int img = s[static_cast<size_t>(p)];
        Vec schreier =
            mul(mul(u, s), inv(trans_[static_cast<size_t>(lev)].at(img)));
        auto [res, j] = strip(schreier, lev + 1);
        if (is_id(res)) continue;
        if (j == static_cast<int>(base_.size())) {
          ensure_base_covers(res);
        }
        sgens_.push_back(res);
        for (int l = j; l > lev; --l) complete_level(l);
        // Our own generator set and orbit are unchanged; keep sweeping.
      }
    }
  }

  int n_ = 0;
  std::vector<Point> window_;
  std::map<Point, int> index_;
  std::vector<Vec> sgens_;
  std::vector<int> base_;
  std::vector<std::map<int, Vec>> trans_;
};

// Breadth-first closure of a generating set; independent of the chain
// machinery, so it doubles as an oracle.  Throws oracle-overflow beyond cap.
inline std::vector<FinitePermutation> bfs_enumerate(
    const std::vector<FinitePermutation>& gens, std::uint64_t cap = 2000000) {
  std::set<FinitePermutation> seen;
  std::queue<FinitePermutation> frontier;
  FinitePermutation id;
  seen.insert(id);
  frontier.push(id);
  while (!frontier.empty()) {
    FinitePermutation g = frontier.front();
    frontier.pop();
    for (const auto& s : gens) {
      FinitePermutation h = fp_compose(g, s);
      if (seen.insert(h).second) {
        if (seen.size() > cap)
          fail(errc::oracle_overflow, "enumeration exceeded cap");
        frontier.push(h);
      }
    }
  }
  return std::vector<FinitePermutation>(seen.begin(), seen.end());
}

enum class GeneratedClass { proper, contains_alt_only, contains_alt_full_sym };

inline const char* to_string(GeneratedClass c) {
  switch (c) {
    case GeneratedClass::proper: return "proper";
    case GeneratedClass::contains_alt_only: return "contains-alt-only";
    case GeneratedClass::contains_alt_full_sym: return "contains-alt-full-sym";
  }
  return "?";
}

// Where the generated group sits relative to Alt/Sym of the support union.
// Order alone decides: an index-2 subgroup of a finite symmetric group is
// the alternating group.
inline GeneratedClass classify_generated(
    const std::vector<FinitePermutation>& gens) {
  std::vector<Point> window = support_union(gens);
  if (window.empty()) return GeneratedClass::proper;
  PermGroup grp(window, gens);
  BigUInt fact = 1;
  for (std::size_t i = 2; i <= window.size(); ++i)
    fact *= static_cast<unsigned>(i);
  BigUInt ord = grp.order();
  if (ord == fact) return GeneratedClass::contains_alt_full_sym;
  if (ord * 2 == fact) return GeneratedClass::contains_alt_only;
  return GeneratedClass::proper;
}

}  // namespace houghton
