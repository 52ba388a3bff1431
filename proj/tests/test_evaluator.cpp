#include <doctest.h>

#include "vtangle/dsl.hpp"
#include "vtangle/eval.hpp"
#include "vtangle/gauss.hpp"
#include "vtangle/randgen.hpp"

using namespace vtangle;

namespace {

const LaurentPoly A = LaurentPoly::variable(1);

LaurentPoly mono(int e, std::int64_t re, std::int64_t im = 0) {
  return LaurentPoly::monomial(e, GaussianInt(re, im));
}

LaurentPoly delta() { return mono(2, -1) + mono(-2, -1); }

EvalContext ctx() { return EvalContext(bracket_datum()); }

}  // namespace

TEST_CASE("eval_object dimensions") {
  EvalContext c = ctx();
  CHECK(eval_object(parse_object("[+]"), c) == 2);
  CHECK(eval_object(parse_object("."), c) == 1);
  CHECK(eval_object(parse_object("[]"), c) == 1);
  CHECK(eval_object(parse_object("[+-][+]"), c) == 8);
  CHECK(eval_object(parse_object("[(+-)+]"), c) == 8);
}

TEST_CASE("eval_generator basics") {
  EvalContext c = ctx();
  RingMatrix v = eval_generator(VirtualCell{PWord::leaf(Letter::Plus), PWord::leaf(Letter::Plus)}, c);
  REQUIRE(v.rows() == 4);
  // Flip permutation pattern.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(v.at(j * 2 + i, i * 2 + j) == LaurentPoly::one());

  CHECK(eval_generator(IdCell{PWord::leaf(Letter::Plus)}, c) == RingMatrix::identity(2));
  CHECK(eval_generator(CrossingCell{Sign::Pos, Dir::Down, Dir::Down}, c) ==
        bracket_datum().R_pos);
  CHECK(eval_generator(SplitCell{PWord::leaf(Letter::Plus), PWord::leaf(Letter::Minus)}, c) ==
        RingMatrix::identity(4));
}

TEST_CASE("eval_term basics") {
  EvalContext c = ctx();
  CHECK(eval_term(MorphismTerm::identity(parse_object("[+]")), c) == RingMatrix::identity(2));
  CHECK(eval_term(parse_term("V[+][+]\nV[+][+]\n"), c) == RingMatrix::identity(4));
  MorphismTerm loop = parse_term("cup[+][-]\ncap[+][-]\n");
  RingMatrix m = eval_term(loop, c);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  CHECK(m.at(0, 0) == delta());
}

TEST_CASE("all crossing orientation variants satisfy R2") {
  EvalContext c = ctx();
  for (Dir d1 : {Dir::Down, Dir::Up})
    for (Dir d2 : {Dir::Down, Dir::Up})
      for (Sign s : {Sign::Pos, Sign::Neg}) {
        CrossingCell first{s, d1, d2};
        CrossingCell second{s == Sign::Pos ? Sign::Neg : Sign::Pos, d2, d1};
        MorphismTerm t{cell_dom(first), cell_cod(second),
                       {Slice{{first}}, Slice{{second}}}};
        CAPTURE(cell_str(first));
        RingMatrix m = eval_term(t, c);
        CHECK(m.is_identity());
      }
}

TEST_CASE("positive curl closure gives the twist scalar") {
  EvalContext c = ctx();
  // Right-side curl on a downward strand.
  MorphismTerm curl = parse_term("dom [+]\nid[+] cup[+][-]\nX+dd id[-]\nid[+] cap[+][-]\n");
  RingMatrix m = eval_term(curl, c);
  CHECK(m == RingMatrix::identity(2).scaled(mono(3, -1)));
  // Negative curl gives the inverse twist.
  MorphismTerm curln = parse_term("dom [+]\nid[+] cup[+][-]\nX-dd id[-]\nid[+] cap[+][-]\n");
  CHECK(eval_term(curln, c) == RingMatrix::identity(2).scaled(mono(-3, -1)));
  // Upward-strand curl agrees.
  MorphismTerm curlu = parse_term("dom [-]\nid[-] cup[-][+]\nX+uu id[+]\nid[-] cap[-][+]\n");
  CHECK(eval_term(curlu, c) == RingMatrix::identity(2).scaled(mono(3, -1)));
}

TEST_CASE("virtual curl evaluates to the flat value 2") {
  // No virtual first Reidemeister move: the flat curl is the rank, not the
  // loop value.
  EvalContext c = ctx();
  MorphismTerm t = parse_term("cup[+][-]\nV[+][-]\ncap[-][+]\n");
  CHECK(eval_term(t, c).at(0, 0) == mono(0, 2));
}

TEST_CASE("build_symmetry composed with its reverse is the identity matrix") {
  EvalContext c = ctx();
  SplitMix rng(2024);
  for (int iter = 0; iter < 20; ++iter) {
    SeqObject a = random_object(rng, 2);
    SeqObject b = random_object(rng, 2);
    MorphismTerm fwd = build_symmetry(a, b);
    MorphismTerm back = build_symmetry(b, a);
    MorphismTerm round = compose(fwd, back);
    CHECK(eval_term(round, c).is_identity());
  }
}

TEST_CASE("functoriality: composition and tensor, randomized") {
  SplitMix rng(99);
  EvalContext c = ctx();
  for (int iter = 0; iter < 60; ++iter) {
    SeqObject dom = random_object(rng, 2);
    MorphismTerm f = random_term_from(dom, rng, rng.range(0, 2));
    MorphismTerm g = random_term_from(f.cod, rng, rng.range(0, 2));
    RingMatrix mf = eval_term(f, c);
    RingMatrix mg = eval_term(g, c);
    CHECK(eval_term(compose(f, g), c) == mg * mf);

    MorphismTerm h = random_term_from(random_object(rng, 1), rng, rng.range(0, 2));
    RingMatrix mh = eval_term(h, c);
    CHECK(eval_term(tensor(f, h), c) == kron(mf, mh));
  }
}

TEST_CASE("interchange law holds at matrix level") {
  SplitMix rng(123);
  EvalContext c = ctx();
  for (int iter = 0; iter < 30; ++iter) {
    SeqObject d1 = random_object(rng, 2), d2 = random_object(rng, 2);
    MorphismTerm f = random_term_from(d1, rng, 1);
    MorphismTerm fp = random_term_from(f.cod, rng, 1);
    MorphismTerm g = random_term_from(d2, rng, 1);
    MorphismTerm gp = random_term_from(g.cod, rng, 1);
    RingMatrix lhs = eval_term(compose(tensor(f, g), tensor(fp, gp)), c);
    RingMatrix rhs = eval_term(tensor(compose(f, fp), compose(g, gp)), c);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("closed invariants: unknot") {
  EvalContext c = ctx();
  MorphismTerm unknot = compile_gauss(parse_gauss("o"));
  CHECK(invariant_closed(unknot, c, false) == delta());
  CHECK(invariant_closed(unknot, c, true) == LaurentPoly::one());
}

TEST_CASE("closed invariants: curls are unknots after normalization") {
  EvalContext c = ctx();
  MorphismTerm curl = compile_gauss(parse_gauss("O1+U1+"));
  CHECK(invariant_closed(curl, c, false) == delta() * mono(3, -1));
  CHECK(invariant_closed(curl, c, true) == LaurentPoly::one());
  MorphismTerm curln = compile_gauss(parse_gauss("O1-U1-"));
  CHECK(invariant_closed(curln, c, true) == LaurentPoly::one());
}

TEST_CASE("closed invariants: trefoil matches the classical value") {
  EvalContext c = ctx();
  MorphismTerm trefoil = compile_gauss(parse_gauss("O1+U2+O3+U1+O2+U3+"));
  // Right trefoil, writhe 3: normalized bracket A^-4 + A^-12 - A^-16.
  LaurentPoly expected = mono(-4, 1) + mono(-12, 1) + mono(-16, -1);
  CHECK(invariant_closed(trefoil, c, true) == expected);
  CHECK(invariant_closed(trefoil, c, false) ==
        expected * delta() * mono(3, -1).pow(3));
}

TEST_CASE("closed invariants: figure-eight matches the classical value") {
  EvalContext c = ctx();
  MorphismTerm fig8 = compile_gauss(parse_gauss("O1+U2-O4-U1+O3+U4-O2-U3+"));
  CHECK(writhe(fig8) == 0);
  LaurentPoly expected = mono(8, 1) + mono(4, -1) + mono(0, 1) + mono(-4, -1) + mono(-8, 1);
  CHECK(invariant_closed(fig8, c, true) == expected);
}

TEST_CASE("closed invariants: hopf link matches the hand-computed state sum") {
  EvalContext c = ctx();
  MorphismTerm hopf = compile_gauss(parse_gauss("O1+U2+,U1+O2+"));
  CHECK(writhe(hopf) == 2);
  LaurentPoly expected = mono(6, 1) + mono(2, 1) + mono(-2, 1) + mono(-6, 1);
  CHECK(invariant_closed(hopf, c, false) == expected);
}

TEST_CASE("open term rejected by closed invariant") {
  EvalContext c = ctx();
  CHECK_THROWS_AS(invariant_closed(parse_term("V[+][+]"), c, false), NotClosedError);
}

TEST_CASE("multiplicativity on disjoint unions") {
  EvalContext c = ctx();
  MorphismTerm a = compile_gauss(parse_gauss("O1+U1+"));
  MorphismTerm b = compile_gauss(parse_gauss("O1+U2+,U1+O2+"));
  LaurentPoly va = invariant_closed(a, c, false);
  LaurentPoly vb = invariant_closed(b, c, false);
  CHECK(invariant_closed(tensor(a, b), c, false) == va * vb);
}

TEST_CASE("long invariants") {
  EvalContext c = ctx();
  MorphismTerm long_unknot = MorphismTerm::identity(parse_object("[+]"));
  CHECK(long_invariant(long_unknot, c) == RingMatrix::identity(2));

  CHECK_THROWS_AS(long_invariant(parse_term("V[+][-]"), c), BoundaryMismatch);

  // Quantum-trace closure of the long trefoil recovers the closed invariant.
  MorphismTerm longtre = parse_term(
      "dom [+]\n"
      "id[+] cup[+][-]\n"
      "X+dd id[-]\n"
      "X+dd id[-]\n"
      "X+dd id[-]\n"
      "id[+] cap[+][-]\n");
  RingMatrix m = long_invariant(longtre, c);
  const RibbonDatum& d = bracket_datum();
  RingMatrix closed = d.cap_pm * kron(m, RingMatrix::identity(2)) * d.cup_pm;
  MorphismTerm trefoil = compile_gauss(parse_gauss("O1+U2+O3+U1+O2+U3+"));
  CHECK(closed.at(0, 0) == invariant_closed(trefoil, c, false));
}

TEST_CASE("long virtual trefoil is a matrix, no scalar coercion") {
  EvalContext c = ctx();
  // Long virtual trefoil: open the virtual trefoil at one strand.
  MorphismTerm t = parse_term(
      "dom [+]\n"
      "id[+] cup[+][-]\n"
      "X+dd id[-]\n"
      "V[+][+] id[-]\n"
      "X+dd id[-]\n"
      "V[+][+] id[-]\n"
      "id[+] cap[+][-]\n");
  RingMatrix m = long_invariant(t, c);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
}
