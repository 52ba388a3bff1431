#include <doctest.h>

#include "vtangle/term.hpp"

using namespace vtangle;

namespace {

const PWord P = PWord::leaf(Letter::Plus);
const PWord M = PWord::leaf(Letter::Minus);

MorphismTerm one_cell(const Cell& c) {
  return MorphismTerm{cell_dom(c), cell_cod(c), {Slice{{c}}}};
}

}  // namespace

TEST_CASE("flatten reads leaves left to right") {
  PWord w = PWord::pair(PWord::pair(P, M), P);
  CHECK(word_str(w.flatten()) == "+-+");
  CHECK(PWord().flatten().empty());
  CHECK(word_str(PWord::pair(P, PWord::pair(P, M)).flatten()) == "++-");
}

TEST_CASE("flatten is a monoid map") {
  PWord a = PWord::pair(P, M);
  PWord b = PWord::pair(PWord::pair(M, M), P);
  Word lhs = PWord::pair(a, b).flatten();
  Word rhs = a.flatten();
  Word rb = b.flatten();
  rhs.insert(rhs.end(), rb.begin(), rb.end());
  CHECK(lhs == rhs);
}

TEST_CASE("pword unit collapses") {
  PWord w = PWord::pair(P, PWord());
  CHECK(w == P);
  CHECK(PWord::pair(PWord(), PWord()).is_empty());
}

TEST_CASE("unit object is distinct from bracketed empty word") {
  SeqObject empty = SeqObject::unit();
  SeqObject bracketed = SeqObject::single(PWord());
  CHECK(empty != bracketed);
  CHECK(empty.str() == ".");
  CHECK(bracketed.str() == "[]");
  CHECK(empty.letter_count() == 0);
  CHECK(bracketed.letter_count() == 0);
}

TEST_CASE("compose with identity and boundary bookkeeping") {
  MorphismTerm f = one_cell(VirtualCell{P, M});
  MorphismTerm idp = MorphismTerm::identity(f.dom);
  CHECK(compose(idp, f) == f);
  CHECK(compose(f, MorphismTerm::identity(f.cod)) == f);

  MorphismTerm cup = one_cell(CupCell{CupOrient::PM});
  MorphismTerm cap = one_cell(CapCell{CupOrient::PM});
  MorphismTerm loop = compose(cup, cap);
  CHECK(loop.dom.is_unit());
  CHECK(loop.cod.is_unit());
  CHECK(loop.slices.size() == 2);

  MorphismTerm g{SeqObject::single(M), SeqObject::unit(), {Slice{{CapCell{CupOrient::MP}}}}};
  CHECK_THROWS_AS(compose(MorphismTerm{SeqObject::unit(), SeqObject::single(P), {}}, g),
                  BoundaryMismatch);
}

TEST_CASE("compose is associative on slice lists") {
  MorphismTerm f = one_cell(CupCell{CupOrient::PM});
  MorphismTerm g = one_cell(VirtualCell{P, M});
  MorphismTerm h = one_cell(CapCell{CupOrient::MP});
  CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
}

TEST_CASE("tensor padding and strict unit") {
  MorphismTerm g = one_cell(VirtualCell{P, P});
  CHECK(tensor(MorphismTerm::identity(SeqObject::unit()), g) == g);
  CHECK(tensor(g, MorphismTerm::identity(SeqObject::unit())) == g);

  MorphismTerm t = tensor(g, MorphismTerm::identity(SeqObject::single(P)));
  REQUIRE(t.slices.size() == 1);
  CHECK(t.slices[0].cells.size() == 2);
  CHECK(t.cod.size() == 3);

  // Strict associativity of juxtaposition.
  MorphismTerm a = one_cell(CupCell{CupOrient::PM});
  CHECK(tensor(tensor(a, g), a) == tensor(a, tensor(g, a)));
}

TEST_CASE("tensor pads shorter factor with identity slices") {
  MorphismTerm tall = compose(one_cell(CupCell{CupOrient::PM}),
                              one_cell(VirtualCell{P, M}));
  MorphismTerm wide = one_cell(CupCell{CupOrient::MP});
  MorphismTerm t = tensor(tall, wide);
  REQUIRE(t.slices.size() == 2);
  CHECK(validate(t).empty());
  CHECK(t.slices[1].cells.size() == 3);  // V cell + two identity pads
}

TEST_CASE("build_symmetry shapes") {
  PWord w1 = PWord::pair(P, M);
  SeqObject a = SeqObject::single(w1);
  SeqObject b = SeqObject::single(P);
  MorphismTerm s = build_symmetry(a, b);
  REQUIRE(s.slices.size() == 1);
  CHECK(s.slices[0].cells.size() == 1);
  CHECK(s.dom == a * b);
  CHECK(s.cod == b * a);

  SeqObject bc = SeqObject({P, M});
  MorphismTerm s2 = build_symmetry(a, bc);
  REQUIRE(s2.slices.size() == 2);
  CHECK(s2.slices[0].cells.size() == 2);
  CHECK(validate(s2).empty());

  MorphismTerm s3 = build_symmetry(SeqObject::unit(), bc);
  CHECK(s3.slices.empty());
  CHECK(s3 == MorphismTerm::identity(bc));
}

TEST_CASE("validate catches interface mismatches") {
  MorphismTerm good = compose(one_cell(CupCell{CupOrient::PM}),
                              one_cell(CapCell{CupOrient::PM}));
  CHECK(validate(good).empty());

  MorphismTerm bad{SeqObject::unit(), SeqObject::unit(),
                   {Slice{{CupCell{CupOrient::PM}}}, Slice{{CapCell{CupOrient::MP}}}}};
  auto report = validate(bad);
  REQUIRE(report.size() == 1);
  CHECK(report[0].slice_index == 1);

  MorphismTerm empty_slice{SeqObject::unit(), SeqObject::unit(), {Slice{}}};
  CHECK(!validate(empty_slice).empty());

  MorphismTerm wrong_cod{SeqObject::unit(), SeqObject::single(P),
                         {Slice{{CupCell{CupOrient::PM}}}}};
  auto r2 = validate(wrong_cod);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].slice_index == -1);
}

TEST_CASE("strictify accepts strict terms and rejects brackets") {
  MorphismTerm v = one_cell(VirtualCell{P, M});
  StrictTerm st = strictify(v);
  CHECK(word_str(st.dom) == "+-");
  CHECK(word_str(st.cod) == "-+");
  CHECK(st.term == v);

  MorphismTerm split = one_cell(SplitCell{P, M});
  CHECK_THROWS_AS(strictify(split), NotStrictError);

  MorphismTerm wide = one_cell(VirtualCell{PWord::pair(P, P), M});
  CHECK_THROWS_AS(strictify(wide), NotStrictError);
}

TEST_CASE("writhe counts signed real crossings") {
  CHECK(writhe(MorphismTerm::identity(SeqObject::unit())) == 0);
  MorphismTerm x = one_cell(CrossingCell{Sign::Pos, Dir::Down, Dir::Down});
  MorphismTerm xx = compose(x, one_cell(CrossingCell{Sign::Neg, Dir::Down, Dir::Down}));
  CHECK(writhe(x) == 1);
  CHECK(writhe(xx) == 0);
  MorphismTerm three = compose(compose(x, x), x);
  CHECK(writhe(three) == 3);
}

TEST_CASE("crossing orientation typing") {
  CrossingCell du{Sign::Pos, Dir::Down, Dir::Up};
  CHECK(cell_dom(du).str() == "[+][-]");
  CHECK(cell_cod(du).str() == "[-][+]");
  CrossingCell uu{Sign::Neg, Dir::Up, Dir::Up};
  CHECK(cell_dom(uu).str() == "[-][-]");
  // Geometric over strand: knot sign flips once per reversed strand.
  CHECK(crossing_over_is_tlbr(CrossingCell{Sign::Pos, Dir::Down, Dir::Down}));
  CHECK(!crossing_over_is_tlbr(CrossingCell{Sign::Pos, Dir::Down, Dir::Up}));
  CHECK(crossing_over_is_tlbr(CrossingCell{Sign::Pos, Dir::Up, Dir::Up}));
  CHECK(!crossing_over_is_tlbr(CrossingCell{Sign::Neg, Dir::Down, Dir::Down}));
}
