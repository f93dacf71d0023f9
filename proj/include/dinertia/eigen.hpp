#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dinertia/inertia.hpp"
#include "dinertia/matrix.hpp"

namespace dinertia {

/// Floating-point spectrum with an a-posteriori residual bound
/// max_i ||M v_i - lambda_i v_i||_inf over the computed eigenpairs.
struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  double residual_bound = 0.0;
};

namespace detail {
inline double frobenius(const RealMatrix& m) {
  double acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) acc += m(i, j) * m(i, j);
  return std::sqrt(acc);
}

inline double off_diagonal_mass(const RealMatrix& m) {
  double acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) acc += m(i, j) * m(i, j);
  return std::sqrt(acc);
}
}  // namespace detail

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, iterated
/// until the off-diagonal Frobenius mass drops below tol * ||M||_F. Simple,
/// and the accumulated rotations stay orthogonal enough to report a tight
/// residual bound.
inline EigenResult float_eigenvalues(const RealMatrix& m_in,
                                     double tol = 1e-13) {
  const std::size_t n = m_in.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m_in(i, j) != m_in(j, i))
        throw std::invalid_argument("float_eigenvalues requires symmetry");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  RealMatrix b = m_in;
  RealMatrix vec(n);
  for (std::size_t i = 0; i < n; ++i) vec(i, i) = 1.0;
  const double scale = detail::frobenius(m_in);
  const int max_sweeps = 20 + 2 * static_cast<int>(n);
  int sweep = 0;
  while (scale > 0 && detail::off_diagonal_mass(b) > tol * scale) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("Jacobi iteration failed to converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = b(p, q);
        if (apq == 0.0) continue;
        const double theta = (b(q, q) - b(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double bpp = b(p, p), bqq = b(q, q);
        b(p, p) = bpp - t * apq;
        b(q, q) = bqq + t * apq;
        b(p, q) = 0.0;
        b(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != p && k != q) {
            const double bpk = b(p, k), bqk = b(q, k);
            b(p, k) = c * bpk - s * bqk;
            b(k, p) = b(p, k);
            b(q, k) = s * bpk + c * bqk;
            b(k, q) = b(q, k);
          }
          const double vkp = vec(k, p), vkq = vec(k, q);
          vec(k, p) = c * vkp - s * vkq;
          vec(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b2) { return b(a, a) < b(b2, b2); });

  EigenResult result;
  for (std::size_t idx : order) result.eigenvalues.push_back(b(idx, idx));
  for (std::size_t idx : order) {
    const double lambda = b(idx, idx);
    double worst = 0;
    for (std::size_t r = 0; r < n; ++r) {
      double mv = 0;
      for (std::size_t k2 = 0; k2 < n; ++k2) mv += m_in(r, k2) * vec(k2, idx);
      worst = std::max(worst, std::abs(mv - lambda * vec(r, idx)));
    }
    result.residual_bound = std::max(result.residual_bound, worst);
  }
  return result;
}

inline EigenResult float_eigenvalues(const RationalMatrix& m,
                                     double tol = 1e-13) {
  return float_eigenvalues(to_real(m), tol);
}

/// Counts eigenvalues below -threshold, within [-threshold, threshold], and
/// above +threshold. The threshold should scale with the matrix (exact
/// arithmetic remains the arbiter for true zeros).
inline Inertia float_inertia(const EigenResult& e, double zero_threshold) {
  if (zero_threshold <= 0)
    throw std::invalid_argument("zero threshold must be positive");
  Inertia result;
  for (double lambda : e.eigenvalues) {
    if (lambda > zero_threshold)
      ++result.plus;
    else if (lambda < -zero_threshold)
      ++result.minus;
    else
      ++result.zero;
  }
  return result;
}

/// Cauchy interlacing check: alpha_k - tol <= beta_k <= alpha_{k+n-m} + tol
/// for eigenvalues (ascending) of a symmetric matrix and one of its principal
/// submatrices.
inline bool check_interlacing(const std::vector<double>& alpha,
                              const std::vector<double>& beta, double tol) {
  if (beta.size() >= alpha.size())
    throw std::invalid_argument("submatrix spectrum must be strictly smaller");
  const std::size_t shift = alpha.size() - beta.size();
  for (std::size_t k = 0; k < beta.size(); ++k) {
    if (beta[k] < alpha[k] - tol) return false;
    if (beta[k] > alpha[k + shift] + tol) return false;
  }
  return true;
}

}  // namespace dinertia
