#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dinertia/congruence.hpp"
#include "dinertia/matrix.hpp"

namespace dinertia {

/// Signature of a symmetric matrix: counts of positive, zero, and negative
/// eigenvalues. Components are nonnegative and sum to the dimension.
struct Inertia {
  int plus = 0;
  int zero = 0;
  int minus = 0;

  int dimension() const { return plus + zero + minus; }
  bool operator==(const Inertia&) const = default;
};

class SingularBlockError : public std::runtime_error {
 public:
  SingularBlockError() : std::runtime_error("leading block is singular") {}
};

/// Exact inertia by symmetric congruence elimination over the rationals.
///
/// Pivot rule: largest-magnitude nonzero diagonal entry of the active block
/// (ties to the lowest index). When the active diagonal is all zero but an
/// off-diagonal entry a != 0 exists, the hollow 2x2 block [[0,a],[a,0]]
/// contributes (1,0,1) and both of its indices are eliminated through the
/// exact Schur complement. An all-zero active block contributes only zeros.
/// Never uses leading-minor determinants, which vanish on hollow matrices.
inline Inertia exact_inertia(const RationalMatrix& m_in) {
  if (!is_symmetric(m_in))
    throw std::invalid_argument("exact_inertia requires a symmetric matrix");
  RationalMatrix m = m_in;
  std::vector<std::size_t> active(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) active[i] = i;
  Inertia result;
  while (!active.empty()) {
    std::size_t pivot = active.size();
    for (std::size_t a = 0; a < active.size(); ++a) {
      const std::size_t i = active[a];
      if (m(i, i) != 0 &&
          (pivot == active.size() ||
           abs(m(i, i)) > abs(m(active[pivot], active[pivot]))))
        pivot = a;
    }
    if (pivot != active.size()) {
      const std::size_t p = active[pivot];
      const Rational d = m(p, p);
      if (d > 0)
        ++result.plus;
      else
        ++result.minus;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (std::size_t i : active) {
        const Rational f = m(i, p) / d;
        if (f != 0)
          for (std::size_t j : active) m(i, j) -= f * m(p, j);
      }
      continue;
    }
    // diagonal of the active block is all zero
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t a = 0; a < active.size() && !off; ++a)
      for (std::size_t b = a + 1; b < active.size() && !off; ++b)
        if (m(active[a], active[b]) != 0) off = {a, b};
    if (!off) {
      result.zero += static_cast<int>(active.size());
      break;
    }
    const std::size_t i0 = active[off->first];
    const std::size_t j0 = active[off->second];
    const Rational a = m(i0, j0);
    ++result.plus;
    ++result.minus;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(off->second));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(off->first));
    std::vector<Rational> u(active.size()), v(active.size());
    for (std::size_t a2 = 0; a2 < active.size(); ++a2) {
      u[a2] = m(active[a2], i0);
      v[a2] = m(active[a2], j0);
    }
    for (std::size_t a2 = 0; a2 < active.size(); ++a2)
      for (std::size_t b2 = 0; b2 < active.size(); ++b2)
        m(active[a2], active[b2]) -= (u[a2] * v[b2] + v[a2] * u[b2]) / a;
  }
  return result;
}

/// Inertia of an arrowhead normal form: always (1, 0, n-1) for a valid form.
/// The claim is re-verified by running exact_inertia on the materialized
/// matrix; a mismatch would falsify the reduction and is a hard error.
inline Inertia arrowhead_inertia(const NormalForm& nf) {
  for (const Rational& d : nf.border)
    if (d <= 0) throw std::invalid_argument("normal form border must be positive");
  if (nf.coupling) {
    if (nf.border.size() < 2)
      throw std::invalid_argument("coupling requires dimension >= 3");
    const Rational& z = *nf.coupling;
    if (z * z >= 4 * nf.border[0] * nf.border[1])
      throw std::invalid_argument("coupling violates z^2 < 4*d1*d2");
  }
  const Inertia expected{1, 0, static_cast<int>(nf.border.size())};
  const Inertia checked = exact_inertia(materialize(nf));
  if (!(checked == expected))
    throw std::logic_error("arrowhead inertia mismatch against exact_inertia");
  return expected;
}

/// Exact determinant by fraction Gaussian elimination with row pivoting.
inline Rational elimination_determinant(const RationalMatrix& m_in) {
  RationalMatrix m = m_in;
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col; r < n; ++r)
      if (abs(m(r, col)) > abs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == 0) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m(r, col) / m(col, col);
      if (f != 0)
        for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

namespace detail {
/// Exact inverse via Gauss-Jordan; nullopt when singular.
inline std::optional<RationalMatrix> invert(const RationalMatrix& m_in) {
  const std::size_t n = m_in.size();
  RationalMatrix m = m_in;
  RationalMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col; r < n; ++r)
      if (abs(m(r, col)) > abs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == 0) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational d = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}
}  // namespace detail

/// det(M) via the Schur determinant formula det(A)det(D - C A^{-1} B), with A
/// the leading `split` x `split` block. Throws SingularBlockError when A is
/// singular.
inline Rational schur_determinant(const RationalMatrix& m, std::size_t split) {
  const std::size_t n = m.size();
  if (split < 1 || split >= n)
    throw std::invalid_argument("split must satisfy 1 <= split < n");
  RationalMatrix a(split);
  for (std::size_t i = 0; i < split; ++i)
    for (std::size_t j = 0; j < split; ++j) a(i, j) = m(i, j);
  const auto a_inv = detail::invert(a);
  if (!a_inv) throw SingularBlockError();
  const std::size_t k = n - split;
  // S = D - C A^{-1} B
  RationalMatrix s(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational acc = m(split + i, split + j);
      for (std::size_t p = 0; p < split; ++p) {
        Rational inner = 0;
        for (std::size_t q = 0; q < split; ++q)
          inner += (*a_inv)(p, q) * m(q, split + j);
        acc -= m(split + i, p) * inner;
      }
      s(i, j) = acc;
    }
  return elimination_determinant(a) * elimination_determinant(s);
}

}  // namespace dinertia
