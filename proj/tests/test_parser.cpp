#include <doctest.h>

#include "vtangle/dsl.hpp"
#include "vtangle/gauss.hpp"
#include "vtangle/eval.hpp"
#include "vtangle/randgen.hpp"
#include "vtangle/selftest.hpp"

#include <algorithm>

using namespace vtangle;

TEST_CASE("parse a one-slice crossing text") {
  MorphismTerm t = parse_term("X+dd id[+]\n");
  REQUIRE(t.slices.size() == 1);
  CHECK(t.slices[0].cells.size() == 2);
  CHECK(t.dom.str() == "[+][+][+]");
  CHECK(t.cod.str() == "[+][+][+]");
}

TEST_CASE("empty text is the identity on the unit object") {
  MorphismTerm t = parse_term("");
  CHECK(t == MorphismTerm::identity(SeqObject::unit()));
  CHECK(render(t).empty());
}

TEST_CASE("unbalanced bracket is a syntax error") {
  CHECK_THROWS_AS(parse_term("id[(+-"), SyntaxError);
  try {
    parse_term("id[+]\nid[(+-");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
}

TEST_CASE("same-orientation cup is rejected") {
  CHECK_THROWS_AS(parse_term("cup[+][+]"), SyntaxError);
  CHECK_THROWS_AS(parse_term("cap[-][-]"), SyntaxError);
}

TEST_CASE("mismatched slices are a validation error") {
  CHECK_THROWS_AS(parse_term("cup[+][-]\ncap[-][+]\n"), ValidationError);
}

TEST_CASE("header fixes the domain of slice-free terms") {
  MorphismTerm t = parse_term("dom [+(-+)][-]\n");
  CHECK(t.slices.empty());
  CHECK(t.dom.str() == "[+(-+)][-]");
  CHECK(t.dom == t.cod);
}

TEST_CASE("render/parse round trip on representative terms") {
  const char* texts[] = {
      "dom .\ncup[+][-]\nV[+][-]\ncap[-][+]\n",
      "dom [(+-)+]\nsplit[(+-)][+]\nmerge[(+-)][+]\n",
      "dom .\nunit\ncounit\n",
      "dom [((+-)-)]\nassocR[+][-][-]\nassocL[+][-][-]\n",
      "dom [+][-]\nX+du\nV[-][+]\n",
  };
  for (const char* text : texts) {
    CAPTURE(text);
    MorphismTerm t = parse_term(text);
    MorphismTerm back = parse_term(render(t));
    CHECK(back == t);
    CHECK(render(back) == render(t));
  }
}

TEST_CASE("render of canonical forms") {
  MorphismTerm v = parse_term("V[+][-]");
  CHECK(render(v) == "dom [+][-]\nV[+][-]\n");
  // Idempotence on already-canonical text.
  CHECK(render(parse_term(render(v))) == render(v));
}

TEST_CASE("term json round trip") {
  MorphismTerm t = parse_term(
      "dom .\ncup[+][-]\nid[+] id[-] cup[-][+]\nX+du id[-] id[+]\ncap[-][+] cap[-][+]\n");
  MorphismTerm back = term_from_json(term_to_json(t));
  CHECK(back == t);
}

TEST_CASE("gauss parse: trefoil") {
  GaussCode g = parse_gauss("O1+U2+O3+U1+O2+U3+");
  REQUIRE(g.components.size() == 1);
  CHECK(g.components[0].size() == 6);
  CHECK(g.components[0][0] == GaussPass{1, Layer::Over, Sign::Pos});
  CHECK(gauss_str(g) == "O1+U2+O3+U1+O2+U3+");
}

TEST_CASE("gauss parse: one-crossing curl is valid") {
  GaussCode g = parse_gauss("O1+U1+");
  CHECK(g.components.size() == 1);
  CHECK(g.components[0].size() == 2);
}

TEST_CASE("gauss parse errors") {
  CHECK_THROWS_AS(parse_gauss("O1+U1-"), PairingError);    // sign disagreement
  CHECK_THROWS_AS(parse_gauss("O1+O1+"), PairingError);    // two overs
  CHECK_THROWS_AS(parse_gauss("O1+U2+U1+"), PairingError); // unpaired label
  CHECK_THROWS_AS(parse_gauss("O1U1"), SyntaxError);       // missing signs
  CHECK_THROWS_AS(parse_gauss("Z1+"), SyntaxError);
}

TEST_CASE("gauss parse: components and bare loops") {
  GaussCode g = parse_gauss("O1+U2+,U1+O2+");
  CHECK(g.components.size() == 2);
  GaussCode unknot = parse_gauss("o");
  REQUIRE(unknot.components.size() == 1);
  CHECK(unknot.components[0].empty());
  GaussCode unlink = parse_gauss("o,o");
  CHECK(unlink.components.size() == 2);
  CHECK(gauss_str(unlink) == "o,o");
  CHECK(parse_gauss("").components.empty());
}

TEST_CASE("compile: empty code gives the empty term") {
  MorphismTerm t = compile_gauss(parse_gauss(""));
  CHECK(t == MorphismTerm::identity(SeqObject::unit()));
}

TEST_CASE("compile: unknot component is a cup closed by a cap") {
  MorphismTerm t = compile_gauss(parse_gauss("o"));
  REQUIRE(t.slices.size() == 2);
  CHECK(std::holds_alternative<CupCell>(t.slices[0].cells[0]));
  CHECK(std::holds_alternative<CapCell>(t.slices[1].cells[0]));
}

TEST_CASE("compile: trefoil structure") {
  MorphismTerm t = compile_gauss(parse_gauss("O1+U2+O3+U1+O2+U3+"));
  CHECK(validate(t).empty());
  CHECK(writhe(t) == 3);
  std::size_t crossings = 0;
  for (const auto& s : t.slices)
    for (const auto& c : s.cells)
      if (std::holds_alternative<CrossingCell>(c)) ++crossings;
  CHECK(crossings == 3);
  // Compiler output is already strict.
  CHECK_NOTHROW(strictify(t));
}

TEST_CASE("compile outputs validate cleanly across the corpus") {
  const char* codes[] = {"",          "o",        "o,o",    "O1+U1+",
                         "O1-U1-",    "O1+U2+,U1+O2+",      "O1+U2+O3+U1+O2+U3+",
                         "O1+U2+U1+O2+", "O1+,U1+"};
  for (const char* code : codes) {
    CAPTURE(code);
    MorphismTerm t = compile_gauss(parse_gauss(code));
    CHECK(validate(t).empty());
    CHECK(t.dom.is_unit());
    CHECK(t.cod.is_unit());
  }
}

TEST_CASE("evaluation is independent of component sweep order") {
  EvalContext c{bracket_datum()};
  for (const auto& [name, code] : corpus_codes()) {
    GaussCode g = parse_gauss(code);
    if (g.components.size() < 2) continue;
    CAPTURE(name);
    LaurentPoly base = invariant_closed(compile_gauss(g), c, false);
    GaussCode rev = g;
    std::reverse(rev.components.begin(), rev.components.end());
    CHECK(invariant_closed(compile_gauss(rev), c, false) == base);
    GaussCode rot = g;
    std::rotate(rot.components.begin(), rot.components.begin() + 1, rot.components.end());
    CHECK(invariant_closed(compile_gauss(rot), c, false) == base);
  }
  // Also on random multi-component codes.
  SplitMix rng(4242);
  for (int iter = 0; iter < 15; ++iter) {
    GaussCode g = random_gauss_code(rng, rng.range(2, 6), 3, 3);
    if (g.components.size() < 2) continue;
    CAPTURE(gauss_str(g));
    LaurentPoly base = invariant_closed(compile_gauss(g), c, false);
    GaussCode rev = g;
    std::reverse(rev.components.begin(), rev.components.end());
    CHECK(invariant_closed(compile_gauss(rev), c, false) == base);
  }
}
