#pragma once

// Small exact linear algebra over Rat: 3-vectors, 3x3 matrices, and a
// null-space routine for the five-point conic fit.

#include <array>
#include <cstddef>
#include <vector>

#include "arguesia/exact_scalar.hpp"

namespace arguesia {

template <class S, std::size_t N>
using VecN = std::array<S, N>;
using Vec3 = VecN<Rat, 3>;
using Vec4 = VecN<Rat, 4>;
using Mat3 = std::array<Vec3, 3>;

template <class S, std::size_t N>
S dot(const VecN<S, N>& a, const VecN<S, N>& b) {
  S s{};
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <class S>
VecN<S, 3> cross(const VecN<S, 3>& a, const VecN<S, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class S, std::size_t N>
VecN<S, N> scale(const S& k, const VecN<S, N>& v) {
  VecN<S, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = k * v[i];
  return r;
}

template <class S, std::size_t N>
VecN<S, N> add(const VecN<S, N>& a, const VecN<S, N>& b) {
  VecN<S, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class S, std::size_t N>
VecN<S, N> sub(const VecN<S, N>& a, const VecN<S, N>& b) {
  VecN<S, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <class S, std::size_t N>
bool is_zero_vec(const VecN<S, N>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// True when a and b are proportional (including when either is zero).
template <class S, std::size_t N>
bool proportional(const VecN<S, N>& a, const VecN<S, N>& b) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

template <class S>
S det3(const std::array<VecN<S, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat s;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

inline Mat3 inverse(const Mat3& a) {
  const Rat d = det3(a);
  if (d.is_zero()) throw DomainError("singular 3x3 matrix");
  // rows of the adjugate are cross products of columns
  const Vec3 c0{a[0][0], a[1][0], a[2][0]};
  const Vec3 c1{a[0][1], a[1][1], a[2][1]};
  const Vec3 c2{a[0][2], a[1][2], a[2][2]};
  return {scale(d.inverse(), cross(c1, c2)), scale(d.inverse(), cross(c2, c0)),
          scale(d.inverse(), cross(c0, c1))};
}

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rat inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of the null space of m (rows x cols).
inline std::vector<std::vector<Rat>> null_space(std::vector<std::vector<Rat>> m, std::size_t cols) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols);
    v[free] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Scales an integer-or-rational vector to primitive integers with the first
/// nonzero entry positive. The zero vector is returned unchanged.
template <std::size_t N>
VecN<Rat, N> canonical_scale(const VecN<Rat, N>& v) {
  mpz_class l = 1;
  mpz_class g = 0;
  int first = 0;
  for (const auto& x : v)
    if (!x.is_zero()) {
      if (first == 0) first = x.sign();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    }
  if (first == 0) return v;
  for (const auto& x : v) {
    const mpz_class n = x.num() * (l / x.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  VecN<Rat, N> r;
  for (std::size_t i = 0; i < N; ++i) {
    mpz_class n = v[i].num() * (l / v[i].den()) / g;
    if (first < 0) n = -n;
    r[i] = Rat(n);
  }
  return r;
}

}  // namespace arguesia
