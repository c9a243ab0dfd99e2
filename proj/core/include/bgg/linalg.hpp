#pragma once

#include <cstddef>
#include <vector>

#include "bgg/scalar.hpp"

namespace bgg::linalg {

/// Dense row-major matrix over the rationals. Weight blocks are small enough
/// that dense storage wins over sparse bookkeeping.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

/// Rank by fraction-free (Bareiss) elimination after clearing denominators row by row.
std::size_t rank(const Matrix& m);

/// Basis of the right null space {x : m x = 0}. Each basis vector has a 1 in
/// its free column and zeros in the other free columns.
std::vector<std::vector<Rational>> kernel(const Matrix& m);

/// Inverse of a square nonsingular matrix; throws InvalidInput otherwise.
Matrix inverse(const Matrix& m);

}  // namespace bgg::linalg
