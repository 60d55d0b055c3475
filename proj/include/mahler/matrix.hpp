#pragma once

#include <cstddef>
#include <vector>

#include "mahler/ring.hpp"

namespace mahler {

// Dense row-major matrix over a RingValue ring. Only what the automaton and
// relation code need: products, equality, and exact nullspace over fields.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingSpec ring, std::size_t rows, std::size_t cols);

  static Matrix identity(RingSpec ring, std::size_t n);

  RingSpec ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RingValue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RingValue& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;

 private:
  RingSpec ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingValue> data_;
};

// In-place reduced row echelon form; returns pivot columns. Field rings only.
std::vector<std::size_t> rref(Matrix& m);

// Basis of {x : m x = 0}, one vector per free column in increasing column order.
std::vector<std::vector<RingValue>> nullspace(Matrix m);

}  // namespace mahler
