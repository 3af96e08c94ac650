// Integer row lattices in Z^d: Hermite normal form, membership, index,
// coordinate solving, and the parity form used to classify twists.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "houghton/errors.hpp"

namespace houghton {

using BigInt = boost::multiprecision::cpp_int;
using LatRow = std::vector<std::int64_t>;

struct LatticeBasis {
  int dim = 0;                // ambient rank (columns)
  std::vector<LatRow> rows;   // spanning rows, not necessarily independent
};

inline LatticeBasis lat_make(int dim, std::vector<LatRow> rows) {
  if (dim < 1) fail(errc::invalid_argument, "lattice dimension must be >= 1");
  for (const auto& r : rows)
    if (r.size() != static_cast<std::size_t>(dim))
      fail(errc::invalid_argument, "lattice row of wrong length");
  return LatticeBasis{dim, std::move(rows)};
}

namespace detail {
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace detail

// Row-style Hermite normal form together with the unimodular transform:
// hnf = transform * rows (as matrices).  Pivots are positive, entries above
// each pivot are reduced into [0, pivot), zero rows sink to the bottom.
struct HermiteForm {
  std::vector<LatRow> hnf;        // same row count as the input
  std::vector<LatRow> transform;  // square, unimodular
  int rank = 0;
  std::vector<int> pivot_cols;    // one per nonzero row, ascending
};

inline HermiteForm lat_hnf(const LatticeBasis& basis) {
  const int m = static_cast<int>(basis.rows.size());
  const int d = basis.dim;
  HermiteForm out;
  out.hnf = basis.rows;
  out.transform.assign(static_cast<size_t>(m), LatRow(static_cast<size_t>(m), 0));
  for (int i = 0; i < m; ++i) out.transform[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;

  auto row_op = [&](int dst, int src, std::int64_t mult) {
    for (int c = 0; c < d; ++c)
      out.hnf[static_cast<size_t>(dst)][static_cast<size_t>(c)] +=
          mult * out.hnf[static_cast<size_t>(src)][static_cast<size_t>(c)];
    for (int c = 0; c < m; ++c)
      out.transform[static_cast<size_t>(dst)][static_cast<size_t>(c)] +=
          mult * out.transform[static_cast<size_t>(src)][static_cast<size_t>(c)];
  };
  auto row_swap = [&](int a, int b) {
    std::swap(out.hnf[static_cast<size_t>(a)], out.hnf[static_cast<size_t>(b)]);
    std::swap(out.transform[static_cast<size_t>(a)], out.transform[static_cast<size_t>(b)]);
  };
  auto row_negate = [&](int r) {
    for (auto& x : out.hnf[static_cast<size_t>(r)]) x = -x;
    for (auto& x : out.transform[static_cast<size_t>(r)]) x = -x;
  };

  int r = 0;
  for (int col = 0; col < d && r < m; ++col) {
    // Euclidean elimination below row r in this column.
    while (true) {
      int best = -1;
      std::int64_t best_abs = 0;
      for (int j = r; j < m; ++j) {
        std::int64_t v = out.hnf[static_cast<size_t>(j)][static_cast<size_t>(col)];
        if (v == 0) continue;
        std::int64_t a = v < 0 ? -v : v;
        if (best < 0 || a < best_abs) {
          best = j;
          best_abs = a;
        }
      }
      if (best < 0) break;  // column already clear
      if (best != r) row_swap(r, best);
      bool clear = true;
      for (int j = r + 1; j < m; ++j) {
        std::int64_t v = out.hnf[static_cast<size_t>(j)][static_cast<size_t>(col)];
        if (v == 0) continue;
        row_op(j, r, -(v / out.hnf[static_cast<size_t>(r)][static_cast<size_t>(col)]));
        if (out.hnf[static_cast<size_t>(j)][static_cast<size_t>(col)] != 0) clear = false;
      }
      if (clear) break;
    }
    if (out.hnf[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
    if (out.hnf[static_cast<size_t>(r)][static_cast<size_t>(col)] < 0) row_negate(r);
    std::int64_t pivot = out.hnf[static_cast<size_t>(r)][static_cast<size_t>(col)];
    for (int j = 0; j < r; ++j) {
      std::int64_t v = out.hnf[static_cast<size_t>(j)][static_cast<size_t>(col)];
      std::int64_t q = detail::floor_div(v, pivot);
      if (q != 0) row_op(j, r, -q);
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

// Index of the lattice in Z^dim, or nullopt when the rank is deficient.
inline std::optional<BigInt> lat_index(const LatticeBasis& basis) {
  HermiteForm h = lat_hnf(basis);
  if (h.rank < basis.dim) return std::nullopt;
  BigInt idx = 1;
  for (int i = 0; i < h.rank; ++i)
    idx *= h.hnf[static_cast<size_t>(i)][static_cast<size_t>(h.pivot_cols[static_cast<size_t>(i)])];
  return idx;
}

namespace detail {
// Reduces v by the HNF rows; returns the coefficient used at each pivot row,
// or nullopt if some step fails to divide.  v becomes the residue.
inline std::optional<std::vector<std::int64_t>> hnf_reduce(const HermiteForm& h,
                                                           LatRow& v) {
  std::vector<std::int64_t> coeffs(static_cast<size_t>(h.rank), 0);
  for (int i = 0; i < h.rank; ++i) {
    int c = h.pivot_cols[static_cast<size_t>(i)];
    std::int64_t pivot = h.hnf[static_cast<size_t>(i)][static_cast<size_t>(c)];
    if (v[static_cast<size_t>(c)] % pivot != 0) return std::nullopt;
    std::int64_t q = v[static_cast<size_t>(c)] / pivot;
    coeffs[static_cast<size_t>(i)] = q;
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] -= q * h.hnf[static_cast<size_t>(i)][j];
  }
  return coeffs;
}
}  // namespace detail

inline bool lat_member(const LatticeBasis& basis, const LatRow& v) {
  if (v.size() != static_cast<std::size_t>(basis.dim))
    fail(errc::invalid_argument, "vector of wrong dimension");
  HermiteForm h = lat_hnf(basis);
  LatRow w = v;
  auto coeffs = detail::hnf_reduce(h, w);
  if (!coeffs) return false;
  for (auto x : w)
    if (x != 0) return false;
  return true;
}

// Expresses v as an integer combination of the original basis rows, if
// possible.  With dependent rows any one valid combination is returned.
inline std::optional<std::vector<std::int64_t>> lat_solve_coords(
    const LatticeBasis& basis, const LatRow& v) {
  if (v.size() != static_cast<std::size_t>(basis.dim))
    fail(errc::invalid_argument, "vector of wrong dimension");
  HermiteForm h = lat_hnf(basis);
  LatRow w = v;
  auto coeffs = detail::hnf_reduce(h, w);
  if (!coeffs) return std::nullopt;
  for (auto x : w)
    if (x != 0) return std::nullopt;
  const int m = static_cast<int>(basis.rows.size());
  std::vector<std::int64_t> result(static_cast<size_t>(m), 0);
  for (int i = 0; i < h.rank; ++i)
    for (int j = 0; j < m; ++j)
      result[static_cast<size_t>(j)] +=
          (*coeffs)[static_cast<size_t>(i)] *
          h.transform[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return result;
}

// If the lattice is exactly the diagonal lattice c_1 Z x ... x c_d Z,
// returns (c_1, ..., c_d); otherwise nullopt.
inline std::optional<std::vector<std::int64_t>> lat_diagonal_form(
    const LatticeBasis& basis) {
  HermiteForm h = lat_hnf(basis);
  if (h.rank < basis.dim) return std::nullopt;
  std::vector<std::int64_t> diag(static_cast<size_t>(basis.dim), 0);
  for (int i = 0; i < h.rank; ++i) {
    for (int c = 0; c < basis.dim; ++c) {
      std::int64_t v = h.hnf[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (c == h.pivot_cols[static_cast<size_t>(i)]) {
        diag[static_cast<size_t>(c)] = v;
      } else if (v != 0) {
        return std::nullopt;
      }
    }
  }
  return diag;
}

// Symmetric bilinear parity form: B(v, w) = (sum v)(sum w) + <v, w> mod 2.
// The twist classification is controlled by its restriction to the lattice.
inline int lat_parity_form(const LatRow& v, const LatRow& w) {
  if (v.size() != w.size())
    fail(errc::invalid_argument, "parity form needs equal dimensions");
  std::int64_t sv = 0, sw = 0, dot = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sv += v[i];
    sw += w[i];
    dot += v[i] * w[i];
  }
  std::int64_t b = sv * sw + dot;
  return static_cast<int>(((b % 2) + 2) % 2);
}

// Whether the parity form is nonzero somewhere on the lattice.  Bilinearity
// makes checking spanning-row pairs sufficient.
inline bool lat_has_odd_pair(const LatticeBasis& basis) {
  for (std::size_t i = 0; i < basis.rows.size(); ++i)
    for (std::size_t j = i; j < basis.rows.size(); ++j)
      if (lat_parity_form(basis.rows[i], basis.rows[j])) return true;
  return false;
}

// Least k >= 1 with k * e_axis in the lattice; requires finite index.
inline std::int64_t lat_axis_multiple(const LatticeBasis& basis, int axis) {
  if (axis < 0 || axis >= basis.dim)
    fail(errc::invalid_argument, "axis out of range");
  auto idx = lat_index(basis);
  if (!idx) fail(errc::invalid_argument, "lattice has infinite index");
  if (*idx > 1000000000000LL)
    fail(errc::unsupported, "lattice index too large for axis search");
  std::int64_t bound = static_cast<std::int64_t>(*idx);
  HermiteForm h = lat_hnf(basis);
  auto hits = [&](std::int64_t k) {
    LatRow v(static_cast<size_t>(basis.dim), 0);
    v[static_cast<size_t>(axis)] = k;
    LatRow w = v;
    auto c = detail::hnf_reduce(h, w);
    if (!c) return false;
    for (auto x : w)
      if (x != 0) return false;
    return true;
  };
  // The index kills Z^dim / L, so the answer divides it.
  std::int64_t best = bound;
  for (std::int64_t k = 1; k * k <= bound; ++k) {
    if (bound % k != 0) continue;
    if (k < best && hits(k)) best = k;
    std::int64_t other = bound / k;
    if (other < best && hits(other)) best = other;
  }
  return best;
}

}  // namespace houghton
