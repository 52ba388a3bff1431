#include "vtangle/poly.hpp"

#include <algorithm>
#include <sstream>

namespace vtangle {

std::string GaussianInt::str() const {
  std::ostringstream os;
  if (im == 0) {
    os << re;
  } else if (re == 0) {
    if (im == 1)
      os << "i";
    else if (im == -1)
      os << "-i";
    else
      os << im << "i";
  } else {
    os << "(" << re;
    if (im > 0) os << "+";
    if (im == 1)
      os << "i";
    else if (im == -1)
      os << "-i";
    else
      os << im << "i";
    os << ")";
  }
  return os.str();
}

LaurentPoly LaurentPoly::monomial(int exp, GaussianInt coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.push_back({exp, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (const auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second = p.terms_.back().second + c;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!c.is_zero()) {
      p.terms_.push_back({e, c});
    }
  }
  return p;
}

GaussianInt LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return GaussianInt(0);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      r.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      r.terms_.push_back(*ib++);
    } else {
      GaussianInt c = ia->second + ib->second;
      if (!c.is_zero()) r.terms_.push_back({ia->first, c});
      ++ia;
      ++ib;
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<LaurentPoly::Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc.push_back({ea + eb, ca * cb});
  return LaurentPoly::from_terms(std::move(acc));
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw DomainError("polynomial is not a unit: " + str());
  return monomial(-terms_[0].first, terms_[0].second.unit_inverse());
}

LaurentPoly LaurentPoly::pow(int exp) const {
  if (exp == 0) return one();
  LaurentPoly base = exp > 0 ? *this : unit_inverse();
  int n = exp > 0 ? exp : -exp;
  LaurentPoly r = one();
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  const auto& lead = divisor.terms_.back();
  if (!lead.second.is_unit())
    throw DomainError("divisor leading coefficient is not a unit: " + divisor.str());
  GaussianInt lead_inv = lead.second.unit_inverse();
  // Quotient exponents cannot drop below min(self) - min(divisor).
  const int q_min = terms_.front().first - divisor.terms_.front().first;
  LaurentPoly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const auto& top = rem.terms_.back();
    int e = top.first - lead.first;
    if (e < q_min) throw DomainError("not exactly divisible: " + str());
    GaussianInt c = top.second * lead_inv;
    quot.push_back({e, c});
    rem = rem - divisor * monomial(e, c);
  }
  return from_terms(std::move(quot));
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    GaussianInt c = it->second;
    int e = it->first;
    std::string lead;
    // Pull a leading minus out of purely real / purely imaginary coefficients.
    bool neg = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string cs = c.str();
    if (e == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs;
      os << "A";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace vtangle
