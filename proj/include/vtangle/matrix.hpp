#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vtangle/poly.hpp"

namespace vtangle {

// Dense row-major matrix over LaurentPoly. 0xN and Nx0 shapes are legal and
// represent the unique maps to/from the zero-dimensional space.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RingMatrix identity(std::size_t n);
  static RingMatrix scalar(const LaurentPoly& value);  // 1x1

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  RingMatrix scaled(const LaurentPoly& s) const;

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

  bool is_identity() const;
  bool is_zero() const;

  // First entry where *this and other differ, as "(r,c): lhs vs rhs".
  // Empty string when equal (or shapes differ, reported as such).
  std::string first_difference(const RingMatrix& other) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

// Kronecker product, row-major block convention:
// kron(A,B)[(i*Br+k),(j*Bc+l)] = A[i,j]*B[k,l].
RingMatrix kron(const RingMatrix& a, const RingMatrix& b);

}  // namespace vtangle
