#include "vtangle/matrix.hpp"

#include <sstream>

namespace vtangle {

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

RingMatrix RingMatrix::scalar(const LaurentPoly& value) {
  RingMatrix m(1, 1);
  m.at(0, 0) = value;
  return m;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DomainError("matrix shape mismatch in product: " + std::to_string(a.rows_) +
                      "x" + std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                      "x" + std::to_string(b.cols_));
  RingMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const LaurentPoly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DomainError("matrix shape mismatch in sum");
  RingMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    r.entries_[i] = a.entries_[i] + b.entries_[i];
  return r;
}

RingMatrix RingMatrix::scaled(const LaurentPoly& s) const {
  RingMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * s;
  return r;
}

bool RingMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const LaurentPoly& e = at(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

bool RingMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::string RingMatrix::first_difference(const RingMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    return "shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
           std::to_string(other.rows_) + "x" + std::to_string(other.cols_);
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != other.at(i, j))
        return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + at(i, j).str() +
               " vs " + other.at(i, j).str();
  return "";
}

std::string RingMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const LaurentPoly& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const LaurentPoly& bkl = b.at(k, l);
          if (bkl.is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return r;
}

}  // namespace vtangle
