#include <doctest.h>

#include "vtangle/dsl.hpp"
#include "vtangle/eval.hpp"
#include "vtangle/gauss.hpp"
#include "vtangle/oracle.hpp"
#include "vtangle/randgen.hpp"

using namespace vtangle;

namespace {

LaurentPoly mono(int e, std::int64_t re) { return LaurentPoly::monomial(e, GaussianInt(re)); }
LaurentPoly delta() { return mono(2, -1) + mono(-2, -1); }

// Closed positive kink: a circle with one positive self-crossing.
MorphismTerm closed_curl() {
  return parse_term(
      "dom .\n"
      "cup[+][-]\n"
      "id[+] cup[+][-] id[-]\n"
      "X+dd id[-] id[-]\n"
      "id[+] cap[+][-] id[-]\n"
      "cap[+][-]\n");
}

// Annular closure of the two-strand braid with k positive crossings.
MorphismTerm braid2_closure(int k) {
  std::string text = "dom .\ncup[-][+]\nid[-] id[+] cup[+][-]\n";
  for (int i = 0; i < k; ++i) text += "id[-] X+dd id[-]\n";
  text += "cap[-][+] id[+] id[-]\ncap[+][-]\n";
  return parse_term(text);
}

}  // namespace

TEST_CASE("unknot: one state, one loop, value delta") {
  MorphismTerm u = compile_gauss(parse_gauss("o"));
  CHECK(real_crossing_count(u) == 0);
  CHECK(loop_count(u, StateAssignment{}) == 1);
  CHECK(bracket_oracle(u) == delta());
}

TEST_CASE("two-component unlink has two loops") {
  MorphismTerm u = compile_gauss(parse_gauss("o,o"));
  CHECK(loop_count(u, StateAssignment{}) == 2);
  CHECK(bracket_oracle(u) == delta() * delta());
}

TEST_CASE("curl smoothings, enumerated by hand") {
  MorphismTerm curl = closed_curl();
  REQUIRE(real_crossing_count(curl) == 1);
  // Splitting the kink along the strands frees the little loop; the other
  // smoothing merges everything into one curve.
  CHECK(loop_count(curl, StateAssignment{{Smoothing::A}}) == 2);
  CHECK(loop_count(curl, StateAssignment{{Smoothing::B}}) == 1);
  CHECK(bracket_oracle(curl) == delta() * mono(3, -1));
}

TEST_CASE("hopf link: the four states by hand") {
  MorphismTerm hopf = braid2_closure(2);
  REQUIRE(real_crossing_count(hopf) == 2);
  CHECK(loop_count(hopf, StateAssignment{{Smoothing::A, Smoothing::A}}) == 2);
  CHECK(loop_count(hopf, StateAssignment{{Smoothing::A, Smoothing::B}}) == 1);
  CHECK(loop_count(hopf, StateAssignment{{Smoothing::B, Smoothing::A}}) == 1);
  CHECK(loop_count(hopf, StateAssignment{{Smoothing::B, Smoothing::B}}) == 2);
  // A^2 d^2 + 2 d + A^-2 d^2 with d = -A^2 - A^-2.
  CHECK(bracket_oracle(hopf) == mono(6, 1) + mono(2, 1) + mono(-2, 1) + mono(-6, 1));
}

TEST_CASE("state assignment must be total") {
  MorphismTerm curl = closed_curl();
  CHECK_THROWS_AS(loop_count(curl, StateAssignment{}), DomainError);
}

TEST_CASE("oracle rejects open terms and bracketed terms") {
  CHECK_THROWS_AS(bracket_oracle(parse_term("V[+][+]")), NotClosedError);
  CHECK_THROWS_AS(bracket_oracle(parse_term("unit\ncounit\n")), NotStrictError);
}

TEST_CASE("oracle matches the evaluator on the corpus") {
  EvalContext c{bracket_datum()};
  const char* codes[] = {"",
                         "o",
                         "o,o",
                         "O1+U1+",
                         "O1-U1-",
                         "O1+U2+,U1+O2+",
                         "O1+U2+O3+U1+O2+U3+",
                         "O1+U2-O4-U1+O3+U4-O2-U3+",
                         "O1+U2+U1+O2+",
                         "O1+,U1+"};
  for (const char* code : codes) {
    CAPTURE(code);
    MorphismTerm t = compile_gauss(parse_gauss(code));
    CHECK(bracket_oracle(t) == invariant_closed(t, c, false));
  }
}

TEST_CASE("oracle matches the evaluator on random codes") {
  EvalContext c{bracket_datum()};
  SplitMix rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    GaussCode g = random_gauss_code(rng, rng.range(0, 6), 3, 2);
    CAPTURE(gauss_str(g));
    MorphismTerm t = compile_gauss(g);
    CHECK(bracket_oracle(t) == invariant_closed(t, c, false));
  }
}

TEST_CASE("state enumeration is capped") {
  // 21-crossing two-strand braid closure: parsing and compiling are fine,
  // the oracle refuses the 2^21 enumeration.
  std::string code;
  for (int i = 1; i <= 21; ++i)
    code += std::string(i % 2 ? "O" : "U") + std::to_string(i) + "+";
  for (int i = 1; i <= 21; ++i)
    code += std::string(i % 2 ? "U" : "O") + std::to_string(i) + "+";
  MorphismTerm t = compile_gauss(parse_gauss(code));
  CHECK_THROWS_AS(bracket_oracle(t), DomainError);
}
