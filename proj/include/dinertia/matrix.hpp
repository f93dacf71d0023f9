#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dinertia/rational.hpp"

namespace dinertia {

/// Dense square matrix, row-major. Value type with exact equality.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& init = T{})
      : n_(n), data_(n * n, init) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = SquareMatrix<Rational>;
using RealMatrix = SquareMatrix<double>;

template <typename T>
bool is_symmetric(const SquareMatrix<T>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

inline Rational max_abs_entry(const RationalMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (abs(m(i, j)) > best) best = abs(m(i, j));
  return best;
}

inline RealMatrix to_real(const RationalMatrix& m) {
  RealMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = to_double(m(i, j));
  return r;
}

/// Rows/columns of the result follow `ordering`: entry (i,j) of the result is
/// entry (ordering[i]-1, ordering[j]-1) of `m` (vertex labels are 1-based).
inline RationalMatrix permute_symmetric(const RationalMatrix& m,
                                        const std::vector<int>& ordering) {
  if (ordering.size() != m.size())
    throw std::invalid_argument("permutation size does not match matrix");
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out(i, j) = m(static_cast<std::size_t>(ordering[i] - 1),
                    static_cast<std::size_t>(ordering[j] - 1));
  return out;
}

}  // namespace dinertia
