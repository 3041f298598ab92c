#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mcat/rational.hpp"

namespace mcat {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Plain Gaussian elimination, pivoting on the first nonzero entry.
/// Returns nullopt when the square system is singular.
std::optional<std::vector<Rational>> solve_rational(RationalMatrix a, std::vector<Rational> b);

/// Sparse square matrix with integer entries, one entry list per row.
using SparseIntegerMatrix = std::vector<std::vector<std::pair<std::size_t, Integer>>>;

/// Solves A x = b over Q for a nonsingular integer matrix by p-adic (Dixon)
/// lifting: one LU factorisation modulo a 62-bit prime, then cheap lifting
/// steps and rational reconstruction. `accept` certifies a reconstructed
/// candidate exactly; lifting continues until it returns true. Returns
/// nullopt if A is singular modulo every prime tried.
std::optional<std::vector<Rational>> solve_padic(
    const SparseIntegerMatrix& a, const std::vector<Integer>& b,
    const std::function<bool(const std::vector<Rational>&)>& accept);

/// Smallest-denominator rational congruent to u modulo m with numerator and
/// denominator bounded by sqrt(m/2); nullopt if none exists.
std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m);

}  // namespace mcat
