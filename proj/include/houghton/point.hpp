// Points of the ray domain X_n = {1..n} x N and of the integer line.
//
// A single Point type covers both worlds: ray >= 1 addresses the point
// (ray, index) of X_n with index >= 1, while ray == 0 marks a line-mode
// point whose index ranges over all of Z.  Keeping one type lets the
// permutation layer share its cycle and parity calculus across both
// domains; mixing modes inside one permutation is rejected at
// construction time.
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "houghton/errors.hpp"

namespace houghton {

struct Point {
  int ray = 0;            // 0 = line mode, otherwise 1..n
  std::int64_t index = 0; // >= 1 in ray mode, any integer in line mode

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point ray_point(int ray, std::int64_t index) {
  if (ray < 1) fail(errc::invalid_argument, "ray must be >= 1");
  if (index < 1) fail(errc::invalid_argument, "ray index must be >= 1");
  return Point{ray, index};
}

inline Point line_point(std::int64_t value) { return Point{0, value}; }

inline bool is_line(const Point& p) { return p.ray == 0; }

// Fixed bijection between Z and X_2: m >= 1 <-> (1, m) and m <= 0 <-> (2, 1-m).
// Under it the shift z -> z+1 corresponds exactly to the generator g_2.
inline Point line_embed(std::int64_t z) {
  return z >= 1 ? ray_point(1, z) : ray_point(2, 1 - z);
}

inline std::int64_t point_project(const Point& p) {
  if (p.ray == 1) return p.index;
  if (p.ray == 2) return 1 - p.index;
  fail(errc::invalid_argument,
       "point_project requires a point of X_2 (ray 1 or 2)");
}

inline std::string to_string(const Point& p) {
  if (is_line(p)) return std::to_string(p.index);
  return "(" + std::to_string(p.ray) + "," + std::to_string(p.index) + ")";
}

}  // namespace houghton
