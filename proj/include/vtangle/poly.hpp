#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vtangle/errors.hpp"

namespace vtangle {

// Gaussian integer a + b*i.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussianInt() = default;
  constexpr GaussianInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  constexpr bool is_zero() const { return re == 0 && im == 0; }

  friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr GaussianInt operator-(GaussianInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(GaussianInt a, GaussianInt b) {
    return a.re == b.re && a.im == b.im;
  }
  friend constexpr bool operator!=(GaussianInt a, GaussianInt b) { return !(a == b); }

  // Defined only for the ring units 1, -1, i, -i.
  bool is_unit() const {
    return (re == 0 && (im == 1 || im == -1)) || (im == 0 && (re == 1 || re == -1));
  }
  GaussianInt unit_inverse() const {
    if (!is_unit()) throw DomainError("gaussian integer is not a unit");
    if (im == 0) return *this;      // (+-1)^-1 = +-1
    return {0, -im};                // (+-i)^-1 = -+i
  }

  std::string str() const;
};

// Univariate Laurent polynomial in A with GaussianInt coefficients.
// Canonical form: terms sorted by ascending exponent, no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<int, GaussianInt>;

  LaurentPoly() = default;
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, GaussianInt(1)); }
  static LaurentPoly monomial(int exp, GaussianInt coeff);
  static LaurentPoly variable(int exp = 1) { return monomial(exp, GaussianInt(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == GaussianInt(1);
  }
  const std::vector<Term>& terms() const { return terms_; }

  GaussianInt coeff(int exp) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // True iff the polynomial is u*A^k with u a Gaussian unit.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].second.is_unit(); }
  LaurentPoly unit_inverse() const;

  // Integer power; exp < 0 requires a unit base.
  LaurentPoly pow(int exp) const;

  // Exact division; throws DomainError when the divisor does not divide
  // exactly or its leading coefficient is not a unit.
  LaurentPoly divexact(const LaurentPoly& divisor) const;

  // Canonical text, exponent-descending, e.g. "-A^2 - A^-2".
  std::string str() const;

  static LaurentPoly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

}  // namespace vtangle
