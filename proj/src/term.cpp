#include "vtangle/term.hpp"

#include <algorithm>

namespace vtangle {

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

SeqObject cup_like_object(CupOrient o) {
  Letter a = o == CupOrient::PM ? Letter::Plus : Letter::Minus;
  return SeqObject({PWord::leaf(a), PWord::leaf(negate(a))});
}

}  // namespace

bool crossing_over_is_tlbr(const CrossingCell& c) {
  // Reversing one strand flips the knot sign but not the geometry.
  int ups = (c.d1 == Dir::Up) + (c.d2 == Dir::Up);
  return (c.sign == Sign::Pos) == (ups % 2 == 0);
}

SeqObject cell_dom(const Cell& c) {
  return std::visit(
      Overload{
          [](const IdCell& x) { return SeqObject::single(x.word); },
          [](const CrossingCell& x) {
            return SeqObject({PWord::leaf(dir_letter(x.d1)), PWord::leaf(dir_letter(x.d2))});
          },
          [](const VirtualCell& x) { return SeqObject({x.left, x.right}); },
          [](const CupCell&) { return SeqObject::unit(); },
          [](const CapCell& x) { return cup_like_object(x.orient); },
          [](const SplitCell& x) { return SeqObject::single(PWord::pair(x.left, x.right)); },
          [](const MergeCell& x) { return SeqObject({x.left, x.right}); },
          [](const UnitCell&) { return SeqObject::unit(); },
          [](const CounitCell&) { return SeqObject::single(PWord()); },
          [](const AssocCell& x) {
            return x.dir == AssocDir::Right
                       ? SeqObject::single(PWord::pair(PWord::pair(x.w1, x.w2), x.w3))
                       : SeqObject::single(PWord::pair(x.w1, PWord::pair(x.w2, x.w3)));
          },
      },
      c);
}

SeqObject cell_cod(const Cell& c) {
  return std::visit(
      Overload{
          [](const IdCell& x) { return SeqObject::single(x.word); },
          [](const CrossingCell& x) {
            return SeqObject({PWord::leaf(dir_letter(x.d2)), PWord::leaf(dir_letter(x.d1))});
          },
          [](const VirtualCell& x) { return SeqObject({x.right, x.left}); },
          [](const CupCell& x) { return cup_like_object(x.orient); },
          [](const CapCell&) { return SeqObject::unit(); },
          [](const SplitCell& x) { return SeqObject({x.left, x.right}); },
          [](const MergeCell& x) { return SeqObject::single(PWord::pair(x.left, x.right)); },
          [](const UnitCell&) { return SeqObject::single(PWord()); },
          [](const CounitCell&) { return SeqObject::unit(); },
          [](const AssocCell& x) {
            return x.dir == AssocDir::Right
                       ? SeqObject::single(PWord::pair(x.w1, PWord::pair(x.w2, x.w3)))
                       : SeqObject::single(PWord::pair(PWord::pair(x.w1, x.w2), x.w3));
          },
      },
      c);
}

bool is_identity_cell(const Cell& c) { return std::holds_alternative<IdCell>(c); }

std::string cell_str(const Cell& c) {
  auto iv = [](const PWord& w) { return "[" + w.str() + "]"; };
  return std::visit(
      Overload{
          [&](const IdCell& x) { return "id" + iv(x.word); },
          [&](const CrossingCell& x) {
            std::string s = "X";
            s += x.sign == Sign::Pos ? '+' : '-';
            s += x.d1 == Dir::Down ? 'd' : 'u';
            s += x.d2 == Dir::Down ? 'd' : 'u';
            return s;
          },
          [&](const VirtualCell& x) { return "V" + iv(x.left) + iv(x.right); },
          [&](const CupCell& x) {
            return x.orient == CupOrient::PM ? std::string("cup[+][-]")
                                             : std::string("cup[-][+]");
          },
          [&](const CapCell& x) {
            return x.orient == CupOrient::PM ? std::string("cap[+][-]")
                                             : std::string("cap[-][+]");
          },
          [&](const SplitCell& x) { return "split" + iv(x.left) + iv(x.right); },
          [&](const MergeCell& x) { return "merge" + iv(x.left) + iv(x.right); },
          [&](const UnitCell&) { return std::string("unit"); },
          [&](const CounitCell&) { return std::string("counit"); },
          [&](const AssocCell& x) {
            return std::string(x.dir == AssocDir::Right ? "assocR" : "assocL") + iv(x.w1) +
                   iv(x.w2) + iv(x.w3);
          },
      },
      c);
}

SeqObject slice_dom(const Slice& s) {
  SeqObject o;
  for (const auto& c : s.cells) o = o * cell_dom(c);
  return o;
}

SeqObject slice_cod(const Slice& s) {
  SeqObject o;
  for (const auto& c : s.cells) o = o * cell_cod(c);
  return o;
}

std::vector<Cell> identity_cells(const SeqObject& o) {
  std::vector<Cell> cells;
  cells.reserve(o.size());
  for (const auto& w : o.intervals()) cells.push_back(IdCell{w});
  return cells;
}

std::vector<SeqObject> MorphismTerm::boundaries() const {
  std::vector<SeqObject> bs;
  bs.reserve(slices.size() + 1);
  bs.push_back(dom);
  for (const auto& s : slices) bs.push_back(slice_cod(s));
  return bs;
}

MorphismTerm compose(const MorphismTerm& f, const MorphismTerm& g) {
  if (f.cod != g.dom)
    throw BoundaryMismatch("cannot compose: codomain " + f.cod.str() +
                           " does not match domain " + g.dom.str());
  MorphismTerm r{f.dom, g.cod, f.slices};
  r.slices.insert(r.slices.end(), g.slices.begin(), g.slices.end());
  return r;
}

MorphismTerm tensor(const MorphismTerm& f, const MorphismTerm& g) {
  MorphismTerm r{f.dom * g.dom, f.cod * g.cod, {}};
  std::size_t n = std::max(f.slices.size(), g.slices.size());
  r.slices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Slice s;
    if (i < f.slices.size())
      s.cells = f.slices[i].cells;
    else
      s.cells = identity_cells(f.cod);
    std::vector<Cell> right =
        i < g.slices.size() ? g.slices[i].cells : identity_cells(g.cod);
    s.cells.insert(s.cells.end(), right.begin(), right.end());
    r.slices.push_back(std::move(s));
  }
  return r;
}

MorphismTerm build_symmetry(const SeqObject& a, const SeqObject& b) {
  MorphismTerm t{a * b, b * a, {}};
  if (a.is_unit() || b.is_unit()) {
    t.cod = a * b;  // same object either way
    return t;
  }
  const std::size_t p = a.size(), q = b.size();
  // Working arrangement; a-intervals walk rightward past b, last one first.
  std::vector<PWord> arr = (a * b).intervals();
  for (std::size_t ai = p; ai-- > 0;) {
    // This interval currently sits at position ai (earlier walkers are
    // already parked on the far right).
    for (std::size_t step = 0; step < q; ++step) {
      std::size_t k = ai + step;
      Slice s;
      for (std::size_t j = 0; j < arr.size(); ++j) {
        if (j == k) {
          s.cells.push_back(VirtualCell{arr[k], arr[k + 1]});
          std::swap(arr[k], arr[k + 1]);
          ++j;  // consumed two intervals
        } else {
          s.cells.push_back(IdCell{arr[j]});
        }
      }
      t.slices.push_back(std::move(s));
    }
  }
  return t;
}

ValidationReport validate(const MorphismTerm& t) {
  ValidationReport report;
  SeqObject current = t.dom;
  for (std::size_t i = 0; i < t.slices.size(); ++i) {
    const Slice& s = t.slices[i];
    if (s.cells.empty()) {
      report.push_back({static_cast<int>(i), "empty slice"});
      continue;
    }
    SeqObject d = slice_dom(s);
    if (d != current) {
      report.push_back({static_cast<int>(i), "interface mismatch: expected " +
                                                 current.str() + ", slice requires " + d.str()});
    }
    current = slice_cod(s);
  }
  if (current != t.cod)
    report.push_back({-1, "codomain mismatch: term ends at " + current.str() +
                              ", declared " + t.cod.str()});
  return report;
}

void require_valid(const MorphismTerm& t) {
  ValidationReport r = validate(t);
  if (!r.empty()) throw ValidationError("invalid term: " + r.front().message);
}

StrictTerm strictify(const MorphismTerm& t) {
  for (const auto& s : t.slices)
    for (const auto& c : s.cells)
      if (std::holds_alternative<SplitCell>(c) || std::holds_alternative<MergeCell>(c) ||
          std::holds_alternative<UnitCell>(c) || std::holds_alternative<CounitCell>(c) ||
          std::holds_alternative<AssocCell>(c))
        throw NotStrictError("term contains a bracket generator: " + cell_str(c));
  StrictTerm st;
  st.dom = t.dom.to_word();
  st.cod = t.cod.to_word();
  for (const auto& b : t.boundaries())
    (void)b.to_word();  // throws if any interval is not a single letter
  st.term = t;
  return st;
}

int writhe(const MorphismTerm& t) {
  int w = 0;
  for (const auto& s : t.slices)
    for (const auto& c : s.cells)
      if (const auto* x = std::get_if<CrossingCell>(&c))
        w += x->sign == Sign::Pos ? 1 : -1;
  return w;
}

}  // namespace vtangle
