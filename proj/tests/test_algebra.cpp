#include <doctest.h>

#include <cstdint>

#include "vtangle/matrix.hpp"
#include "vtangle/poly.hpp"
#include "vtangle/ribbon.hpp"

using namespace vtangle;

namespace {

// Deterministic generator for randomized identities.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

LaurentPoly random_poly(Rng& rng) {
  LaurentPoly p;
  int terms = rng.range(0, 4);
  for (int i = 0; i < terms; ++i) {
    p += LaurentPoly::monomial(rng.range(-5, 5),
                               GaussianInt(rng.range(-3, 3), rng.range(-3, 3)));
  }
  return p;
}

RingMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  RingMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.range(0, 2) != 0) m.at(i, j) = random_poly(rng);
  return m;
}

const LaurentPoly A = LaurentPoly::variable(1);
const LaurentPoly Ainv = LaurentPoly::variable(-1);

}  // namespace

TEST_CASE("laurent poly basics") {
  CHECK((A + Ainv) * (A - Ainv) == A.pow(2) - Ainv.pow(2));
  LaurentPoly p = random_poly(*new Rng(1));
  CHECK(p * LaurentPoly::one() == p);
  LaurentPoly iA = LaurentPoly::monomial(1, GaussianInt(0, 1));
  CHECK(iA * iA == LaurentPoly::monomial(2, GaussianInt(-1)));
}

TEST_CASE("laurent poly ring axioms, randomized") {
  Rng rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == LaurentPoly::zero());
  }
}

TEST_CASE("laurent poly units and exact division") {
  LaurentPoly u = LaurentPoly::monomial(3, GaussianInt(0, -1));  // -i A^3
  CHECK(u.is_unit());
  CHECK(u * u.unit_inverse() == LaurentPoly::one());
  CHECK(u.pow(-2) == u.unit_inverse() * u.unit_inverse());

  LaurentPoly delta = -(A.pow(2)) - Ainv.pow(2);
  Rng rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    LaurentPoly p = random_poly(rng);
    CHECK((p * delta).divexact(delta) == p);
  }
  CHECK_THROWS_AS(LaurentPoly::one().divexact(delta), DomainError);
}

TEST_CASE("laurent poly text form") {
  LaurentPoly delta = -(A.pow(2)) - Ainv.pow(2);
  CHECK(delta.str() == "-A^2 - A^-2");
  CHECK(LaurentPoly::zero().str() == "0");
  CHECK(LaurentPoly::one().str() == "1");
  CHECK((A.pow(2) + LaurentPoly::monomial(0, GaussianInt(0, 1))).str() == "A^2 + i");
}

TEST_CASE("kron examples") {
  RingMatrix I2 = RingMatrix::identity(2);
  CHECK(kron(I2, I2) == RingMatrix::identity(4));

  Rng rng(5);
  RingMatrix m = random_matrix(rng, 3, 2);
  LaurentPoly s = random_poly(rng);
  CHECK(kron(RingMatrix::scalar(s), m) == m.scaled(s));

  // swap (x) I2 acts as the permutation (i j k) -> (j i k) on 3 factors.
  RingMatrix swap2(4, 4);
  swap2.at(0, 0) = LaurentPoly::one();
  swap2.at(1, 2) = LaurentPoly::one();
  swap2.at(2, 1) = LaurentPoly::one();
  swap2.at(3, 3) = LaurentPoly::one();
  RingMatrix big = kron(swap2, I2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        std::size_t in = static_cast<std::size_t>(i * 4 + j * 2 + k);
        std::size_t out = static_cast<std::size_t>(j * 4 + i * 2 + k);
        CHECK(big.at(out, in) == LaurentPoly::one());
      }
}

TEST_CASE("kron mixed product property, randomized") {
  Rng rng(11);
  for (int iter = 0; iter < 25; ++iter) {
    RingMatrix m = random_matrix(rng, 2, 3), p = random_matrix(rng, 3, 2);
    RingMatrix nmat = random_matrix(rng, 2, 2), q = random_matrix(rng, 2, 2);
    CHECK(kron(m, nmat) * kron(p, q) == kron(m * p, nmat * q));
    RingMatrix r = random_matrix(rng, 2, 2);
    CHECK(kron(kron(m, nmat), r) == kron(m, kron(nmat, r)));
  }
}

TEST_CASE("bracket datum passes every axiom") {
  const RibbonDatum& d = bracket_datum();
  auto fails = datum_failures(validate_datum(d));
  for (const auto& f : fails) {
    CAPTURE(f.name);
    CAPTURE(f.detail);
    CHECK(false);
  }
  CHECK(fails.empty());
}

TEST_CASE("bracket datum pinned values") {
  const RibbonDatum& d = bracket_datum();
  LaurentPoly delta = -(A.pow(2)) - Ainv.pow(2);
  CHECK(d.loop_value() == delta);
  CHECK((d.cap_mp * d.cup_mp).at(0, 0) == delta);
  CHECK(d.twist_scalar() == LaurentPoly::monomial(3, GaussianInt(-1)));
  // R_pos matches the A*Id + A^-1*(cup.cap) construction entrywise.
  RingMatrix K = d.cup_pm * d.cap_pm;
  CHECK(d.R_pos == RingMatrix::identity(4).scaled(A) + K.scaled(Ainv));
}

TEST_CASE("perturbed datum fails yang-baxter") {
  RibbonDatum d = bracket_datum();
  d.R_pos.at(1, 1) += LaurentPoly::one();
  auto fails = datum_failures(validate_datum(d));
  bool yb = false;
  for (const auto& f : fails) {
    if (f.name == "yang_baxter") {
      yb = true;
      CHECK(!f.detail.empty());
    }
  }
  CHECK(yb);
}

TEST_CASE("shape errors are reported") {
  RibbonDatum d = bracket_datum();
  d.R_pos = RingMatrix::identity(3);
  auto fails = datum_failures(validate_datum(d));
  REQUIRE(!fails.empty());
  CHECK(fails.front().name == "shapes");
}

TEST_CASE("datum json round trip") {
  const RibbonDatum& d = bracket_datum();
  RibbonDatum back = datum_from_json(datum_to_json(d));
  CHECK(back.dim == d.dim);
  CHECK(back.R_pos == d.R_pos);
  CHECK(back.cup_mp == d.cup_mp);
  CHECK(back.cap_pm == d.cap_pm);
  CHECK(back.twist == d.twist);
}
