#include "vtangle/rewrite.hpp"

#include <array>
#include <deque>
#include <unordered_set>

#include "vtangle/dsl.hpp"

namespace vtangle {

namespace {

const std::array<Letter, 2> kLetters = {Letter::Plus, Letter::Minus};
const std::array<Sign, 2> kSigns = {Sign::Pos, Sign::Neg};
const std::array<Dir, 2> kDirs = {Dir::Down, Dir::Up};

Cell cid(Letter a) { return IdCell{PWord::leaf(a)}; }

std::vector<Cell> ids_of(const SeqObject& o) { return identity_cells(o); }

char letter_tag(Letter l) { return l == Letter::Plus ? 'p' : 'm'; }
char dir_tag(Dir d) { return d == Dir::Down ? 'd' : 'u'; }
char sign_tag(Sign s) { return s == Sign::Pos ? 'p' : 'n'; }

// ---- window machinery ------------------------------------------------------

std::size_t interval_count(const std::vector<Cell>& cells, std::size_t upto, bool dom) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < upto && j < cells.size(); ++j)
    n += (dom ? cell_dom(cells[j]) : cell_cod(cells[j])).size();
  return n;
}

// Verifies `w` anchored at (si, ci); returns the cell offset of each row.
// The window's left edge is tracked boundary by boundary: cells left of the
// window may change the edge's interval offset between rows.
std::optional<std::vector<std::size_t>> locate(const MorphismTerm& t, std::size_t si,
                                               std::size_t ci, const Window& w) {
  if (w.rows.empty() || si + w.rows.size() > t.slices.size()) return std::nullopt;
  std::vector<std::size_t> offsets(w.rows.size());
  std::size_t boundary_pos = 0;
  for (std::size_t r = 0; r < w.rows.size(); ++r) {
    const auto& cells = t.slices[si + r].cells;
    std::size_t offset;
    if (r == 0) {
      if (ci > cells.size()) return std::nullopt;
      offset = ci;
    } else {
      // The row must split exactly at the window's left edge.
      std::size_t acc = 0, j = 0;
      for (; j < cells.size() && acc < boundary_pos; ++j)
        acc += cell_dom(cells[j]).size();
      if (acc != boundary_pos) return std::nullopt;
      offset = j;
    }
    const auto& want = w.rows[r];
    if (offset + want.size() > cells.size()) return std::nullopt;
    for (std::size_t k = 0; k < want.size(); ++k)
      if (!(cells[offset + k] == want[k])) return std::nullopt;
    offsets[r] = offset;
    boundary_pos = interval_count(cells, offset, /*dom=*/false);
  }
  return offsets;
}

MorphismTerm window_term(const Window& w) {
  MorphismTerm t;
  bool empty = true;
  for (const auto& row : w.rows)
    if (!row.empty()) empty = false;
  if (empty) return MorphismTerm::identity(SeqObject::unit());
  for (const auto& row : w.rows) t.slices.push_back(Slice{row});
  t.dom = slice_dom(t.slices.front());
  t.cod = slice_cod(t.slices.back());
  return t;
}

MoveVariant concrete(std::string name, Window lhs, Window rhs, bool decreasing) {
  MoveVariant v;
  v.name = std::move(name);
  v.decreasing = decreasing;
  v.samples = {{window_term(lhs), window_term(rhs)}};
  v.bind = [lhs = std::move(lhs), rhs = std::move(rhs)](
               const MorphismTerm& t, std::size_t si,
               std::size_t ci) -> std::optional<std::pair<Window, Window>> {
    if (!locate(t, si, ci, lhs)) return std::nullopt;
    return std::make_pair(lhs, rhs);
  };
  return v;
}

// Registers a relation in both directions.
void concrete_both(std::vector<MoveVariant>& out, const std::string& name, Window lhs,
                   Window rhs, bool decreasing) {
  out.push_back(concrete(name, lhs, rhs, decreasing));
  out.push_back(concrete(name + ":rev", std::move(rhs), std::move(lhs), false));
}

// ---- concrete move families ------------------------------------------------

void build_r2(std::vector<MoveVariant>& out) {
  for (Dir d1 : kDirs)
    for (Dir d2 : kDirs)
      for (Sign s : kSigns) {
        CrossingCell first{s, d1, d2};
        CrossingCell second{s == Sign::Pos ? Sign::Neg : Sign::Pos, d2, d1};
        Letter a = dir_letter(d1), b = dir_letter(d2);
        Window lhs{{{first}, {second}}};
        Window rhs{{{cid(a), cid(b)}, {cid(a), cid(b)}}};
        concrete_both(out, std::string("r2:") + sign_tag(s) + dir_tag(d1) + dir_tag(d2),
                      lhs, rhs, /*decreasing=*/true);
      }
}

// A crossing's stored sign from its over-strand geometry and directions:
// reversing one strand flips the knot sign, not the picture.
Sign geometric_sign(bool over_tlbr, Dir d1, Dir d2) {
  int ups = (d1 == Dir::Up) + (d2 == Dir::Up);
  bool even = ups % 2 == 0;
  return (over_tlbr == even) ? Sign::Pos : Sign::Neg;
}

Window braid_window(bool over_tlbr, std::array<Dir, 3> dirs, bool left_form) {
  // All three crossings share the sliding strand's geometry; the knot signs
  // follow from the orientations.
  std::array<int, 3> perm = {0, 1, 2};
  auto cross_row = [&](int k) {
    std::vector<Cell> cells;
    for (int i = 0; i < 3; ++i) {
      if (i == k) {
        Dir d1 = dirs[static_cast<std::size_t>(perm[k])];
        Dir d2 = dirs[static_cast<std::size_t>(perm[k + 1])];
        cells.push_back(CrossingCell{geometric_sign(over_tlbr, d1, d2), d1, d2});
        std::swap(perm[k], perm[k + 1]);
        ++i;
      } else {
        cells.push_back(cid(dir_letter(dirs[static_cast<std::size_t>(perm[i])])));
      }
    }
    return cells;
  };
  Window w;
  const std::array<int, 3> order = left_form ? std::array<int, 3>{0, 1, 0}
                                             : std::array<int, 3>{1, 0, 1};
  for (int k : order) w.rows.push_back(cross_row(k));
  return w;
}

void build_r3(std::vector<MoveVariant>& out) {
  for (bool over_tlbr : {true, false})
    for (Dir a : kDirs)
      for (Dir b : kDirs)
        for (Dir c : kDirs) {
          std::array<Dir, 3> dirs{a, b, c};
          concrete_both(out,
                        std::string("r3:") + (over_tlbr ? 't' : 'b') + dir_tag(a) +
                            dir_tag(b) + dir_tag(c),
                        braid_window(over_tlbr, dirs, true),
                        braid_window(over_tlbr, dirs, false), false);
        }
}

void build_vr2(std::vector<MoveVariant>& out) {
  for (Letter a : kLetters)
    for (Letter b : kLetters) {
      PWord wa = PWord::leaf(a), wb = PWord::leaf(b);
      Window lhs{{{VirtualCell{wa, wb}}, {VirtualCell{wb, wa}}}};
      Window rhs{{{cid(a), cid(b)}, {cid(a), cid(b)}}};
      concrete_both(out, std::string("vr2:") + letter_tag(a) + letter_tag(b), lhs, rhs,
                    true);
    }
}

Window vbraid_window(std::array<Letter, 3> ls, bool left_form) {
  std::array<int, 3> perm = {0, 1, 2};
  auto row = [&](int k) {
    std::vector<Cell> cells;
    for (int i = 0; i < 3; ++i) {
      if (i == k) {
        cells.push_back(VirtualCell{PWord::leaf(ls[static_cast<std::size_t>(perm[k])]),
                                    PWord::leaf(ls[static_cast<std::size_t>(perm[k + 1])])});
        std::swap(perm[k], perm[k + 1]);
        ++i;
      } else {
        cells.push_back(cid(ls[static_cast<std::size_t>(perm[i])]));
      }
    }
    return cells;
  };
  Window w;
  const std::array<int, 3> order = left_form ? std::array<int, 3>{0, 1, 0}
                                             : std::array<int, 3>{1, 0, 1};
  for (int k : order) w.rows.push_back(row(k));
  return w;
}

void build_vr3(std::vector<MoveVariant>& out) {
  for (Letter a : kLetters)
    for (Letter b : kLetters)
      for (Letter c : kLetters) {
        std::array<Letter, 3> ls{a, b, c};
        concrete_both(out,
                      std::string("vr3:") + letter_tag(a) + letter_tag(b) + letter_tag(c),
                      vbraid_window(ls, true), vbraid_window(ls, false), false);
      }
}

void build_mixed(std::vector<MoveVariant>& out) {
  // A real crossing slides through a virtual strand.
  for (Sign s : kSigns)
    for (Dir d1 : kDirs)
      for (Dir d3 : kDirs)
        for (Letter l2 : kLetters) {
          Letter l1 = dir_letter(d1), l3 = dir_letter(d3);
          PWord w1 = PWord::leaf(l1), w2 = PWord::leaf(l2), w3 = PWord::leaf(l3);
          CrossingCell x{s, d1, d3};
          Window lhs{{{VirtualCell{w1, w2}, cid(l3)},
                      {cid(l2), x},
                      {VirtualCell{w2, w3}, cid(l1)}}};
          Window rhs{{{cid(l1), VirtualCell{w2, w3}},
                      {x, cid(l2)},
                      {cid(l3), VirtualCell{w1, w2}}}};
          concrete_both(out,
                        std::string("mixed:") + sign_tag(s) + dir_tag(d1) + dir_tag(d3) +
                            letter_tag(l2),
                        lhs, rhs, false);
        }
}

void build_zigzag(std::vector<MoveVariant>& out) {
  Cell cup_pm = CupCell{CupOrient::PM}, cup_mp = CupCell{CupOrient::MP};
  Cell cap_pm = CapCell{CupOrient::PM}, cap_mp = CapCell{CupOrient::MP};
  Letter P = Letter::Plus, M = Letter::Minus;
  concrete_both(out, "zigzag:ps", Window{{{cid(P), cup_mp}, {cap_pm, cid(P)}}},
                Window{{{cid(P)}, {cid(P)}}}, true);
  concrete_both(out, "zigzag:pz", Window{{{cup_pm, cid(P)}, {cid(P), cap_mp}}},
                Window{{{cid(P)}, {cid(P)}}}, true);
  concrete_both(out, "zigzag:ms", Window{{{cid(M), cup_pm}, {cap_mp, cid(M)}}},
                Window{{{cid(M)}, {cid(M)}}}, true);
  concrete_both(out, "zigzag:mz", Window{{{cup_mp, cid(M)}, {cid(M), cap_pm}}},
                Window{{{cid(M)}, {cid(M)}}}, true);
}

Window curl_window(Sign s, Letter a) {
  if (a == Letter::Plus) {
    return Window{{{cid(a), CupCell{CupOrient::PM}},
                   {CrossingCell{s, Dir::Down, Dir::Down}, cid(Letter::Minus)},
                   {cid(a), CapCell{CupOrient::PM}}}};
  }
  return Window{{{cid(a), CupCell{CupOrient::MP}},
                 {CrossingCell{s, Dir::Up, Dir::Up}, cid(Letter::Plus)},
                 {cid(a), CapCell{CupOrient::MP}}}};
}

void build_r1_framed(std::vector<MoveVariant>& out) {
  // Opposite curls cancel; a lone curl does not (framed calculus).
  for (Letter a : kLetters)
    for (Sign first : kSigns) {
      Sign second = first == Sign::Pos ? Sign::Neg : Sign::Pos;
      Window lhs;
      for (auto& row : curl_window(first, a).rows) lhs.rows.push_back(row);
      for (auto& row : curl_window(second, a).rows) lhs.rows.push_back(row);
      Window rhs;
      for (int i = 0; i < 6; ++i) rhs.rows.push_back({cid(a)});
      concrete_both(out, std::string("r1f:") + letter_tag(a) + sign_tag(first), lhs, rhs,
                    true);
    }
}

void build_unit_counit(std::vector<MoveVariant>& out) {
  concrete_both(out, "unit_counit:uc", Window{{{UnitCell{}}, {CounitCell{}}}},
                Window{{{}, {}}}, true);
  concrete_both(out, "unit_counit:cu", Window{{{CounitCell{}}, {UnitCell{}}}},
                Window{{{IdCell{PWord()}}, {IdCell{PWord()}}}}, true);
}

// Letter-level naturality of the virtual crossing for births and deaths.
void build_slides(std::vector<MoveVariant>& out) {
  for (CupOrient o : {CupOrient::PM, CupOrient::MP})
    for (Letter u : kLetters) {
      Letter b1 = o == CupOrient::PM ? Letter::Plus : Letter::Minus;
      Letter b2 = negate(b1);
      PWord wu = PWord::leaf(u), w1 = PWord::leaf(b1), w2 = PWord::leaf(b2);
      std::string tag = std::string(1, o == CupOrient::PM ? 'p' : 'm') + letter_tag(u);
      Window cup_r_lhs{{{CupCell{o}, cid(u)},
                        {cid(b1), VirtualCell{w2, wu}},
                        {VirtualCell{w1, wu}, cid(b2)}}};
      Window cup_r_rhs{{{cid(u), CupCell{o}},
                        {cid(u), cid(b1), cid(b2)},
                        {cid(u), cid(b1), cid(b2)}}};
      concrete_both(out, "slide:cup_r:" + tag, cup_r_lhs, cup_r_rhs, false);

      Window cup_l_lhs{{{cid(u), CupCell{o}},
                        {VirtualCell{wu, w1}, cid(b2)},
                        {cid(b1), VirtualCell{wu, w2}}}};
      Window cup_l_rhs{{{CupCell{o}, cid(u)},
                        {cid(b1), cid(b2), cid(u)},
                        {cid(b1), cid(b2), cid(u)}}};
      concrete_both(out, "slide:cup_l:" + tag, cup_l_lhs, cup_l_rhs, false);

      Window cap_r_lhs{{{CapCell{o}, cid(u)}, {cid(u)}, {cid(u)}}};
      Window cap_r_rhs{{{cid(b1), VirtualCell{w2, wu}},
                        {VirtualCell{w1, wu}, cid(b2)},
                        {cid(u), CapCell{o}}}};
      concrete_both(out, "slide:cap_r:" + tag, cap_r_lhs, cap_r_rhs, false);

      Window cap_l_lhs{{{cid(u), CapCell{o}}, {cid(u)}, {cid(u)}}};
      Window cap_l_rhs{{{VirtualCell{wu, w1}, cid(b2)},
                        {cid(b1), VirtualCell{wu, w2}},
                        {CapCell{o}, cid(u)}}};
      concrete_both(out, "slide:cap_l:" + tag, cap_l_lhs, cap_l_rhs, false);
    }
}

// ---- schematic variants ----------------------------------------------------

MoveVariant schematic(std::string name, bool decreasing,
                      std::function<std::optional<std::pair<Window, Window>>(
                          const MorphismTerm&, std::size_t, std::size_t)>
                          bind,
                      std::vector<std::pair<MorphismTerm, MorphismTerm>> samples) {
  MoveVariant v;
  v.name = std::move(name);
  v.decreasing = decreasing;
  v.bind = std::move(bind);
  v.samples = std::move(samples);
  return v;
}

std::optional<std::pair<Window, Window>> check_window(const MorphismTerm& t, std::size_t si,
                                                      std::size_t ci, Window lhs,
                                                      Window rhs) {
  if (!locate(t, si, ci, lhs)) return std::nullopt;
  return std::make_pair(std::move(lhs), std::move(rhs));
}

std::pair<Window, Window> puncture_windows(const PWord& a, const PWord& b) {
  Window lhs{{{SplitCell{a, b}}, {MergeCell{a, b}}}};
  Window rhs{{{IdCell{PWord::pair(a, b)}}, {IdCell{PWord::pair(a, b)}}}};
  return {lhs, rhs};
}

std::pair<Window, Window> tear_windows(const PWord& a, const PWord& b) {
  Window lhs{{{MergeCell{a, b}}, {SplitCell{a, b}}}};
  Window rhs{{{IdCell{a}, IdCell{b}}, {IdCell{a}, IdCell{b}}}};
  return {lhs, rhs};
}

std::pair<Window, Window> assoc_windows(AssocDir dir, const PWord& w1, const PWord& w2,
                                        const PWord& w3) {
  AssocDir inv = dir == AssocDir::Right ? AssocDir::Left : AssocDir::Right;
  PWord obj = dir == AssocDir::Right ? PWord::pair(PWord::pair(w1, w2), w3)
                                     : PWord::pair(w1, PWord::pair(w2, w3));
  Window lhs{{{AssocCell{dir, w1, w2, w3}}, {AssocCell{inv, w1, w2, w3}}}};
  Window rhs{{{IdCell{obj}}, {IdCell{obj}}}};
  return {lhs, rhs};
}

std::pair<MorphismTerm, MorphismTerm> window_samples(const std::pair<Window, Window>& w) {
  return {window_term(w.first), window_term(w.second)};
}

std::pair<MorphismTerm, MorphismTerm> flipped(std::pair<MorphismTerm, MorphismTerm> p) {
  return {p.second, p.first};
}

void build_puncture(std::vector<MoveVariant>& out) {
  PWord sw1 = PWord::leaf(Letter::Plus);
  PWord sw2 = PWord::pair(PWord::leaf(Letter::Minus), PWord::leaf(Letter::Plus));
  out.push_back(schematic(
      "puncture", true,
      [](const MorphismTerm& t, std::size_t si,
         std::size_t ci) -> std::optional<std::pair<Window, Window>> {
        if (si >= t.slices.size() || ci >= t.slices[si].cells.size()) return std::nullopt;
        const auto* sp = std::get_if<SplitCell>(&t.slices[si].cells[ci]);
        if (!sp) return std::nullopt;
        auto [lhs, rhs] = puncture_windows(sp->left, sp->right);
        return check_window(t, si, ci, lhs, rhs);
      },
      {window_samples(puncture_windows(sw1, sw2)),
       window_samples(puncture_windows(PWord(), sw1))}));
  out.push_back(schematic(
      "puncture:rev", false,
      [](const MorphismTerm& t, std::size_t si,
         std::size_t ci) -> std::optional<std::pair<Window, Window>> {
        if (si >= t.slices.size() || ci >= t.slices[si].cells.size()) return std::nullopt;
        const auto* idc = std::get_if<IdCell>(&t.slices[si].cells[ci]);
        if (!idc || !idc->word.is_pair()) return std::nullopt;
        auto [lhs, rhs] = puncture_windows(idc->word.left(), idc->word.right());
        return check_window(t, si, ci, rhs, lhs);
      },
      {flipped(window_samples(puncture_windows(sw1, sw2)))}));
}

void build_tear(std::vector<MoveVariant>& out) {
  PWord sw1 = PWord::leaf(Letter::Plus);
  PWord sw2 = PWord::pair(PWord::leaf(Letter::Minus), PWord::leaf(Letter::Plus));
  out.push_back(schematic(
      "tear", false,
      [](const MorphismTerm& t, std::size_t si,
         std::size_t ci) -> std::optional<std::pair<Window, Window>> {
        if (si >= t.slices.size() || ci >= t.slices[si].cells.size()) return std::nullopt;
        const auto* mg = std::get_if<MergeCell>(&t.slices[si].cells[ci]);
        if (!mg) return std::nullopt;
        auto [lhs, rhs] = tear_windows(mg->left, mg->right);
        return check_window(t, si, ci, lhs, rhs);
      },
      {window_samples(tear_windows(sw1, sw2)), window_samples(tear_windows(sw1, sw1))}));
  out.push_back(schematic(
      "tear:rev", false,
      [](const MorphismTerm& t, std::size_t si,
         std::size_t ci) -> std::optional<std::pair<Window, Window>> {
        if (si >= t.slices.size() || ci + 1 >= t.slices[si].cells.size()) return std::nullopt;
        const auto* a = std::get_if<IdCell>(&t.slices[si].cells[ci]);
        const auto* b = std::get_if<IdCell>(&t.slices[si].cells[ci + 1]);
        if (!a || !b || a->word.is_empty() || b->word.is_empty()) return std::nullopt;
        auto [lhs, rhs] = tear_windows(a->word, b->word);
        return check_window(t, si, ci, rhs, lhs);
      },
      {flipped(window_samples(tear_windows(sw1, sw2)))}));
}

void build_assoc_cancel(std::vector<MoveVariant>& out) {
  PWord sw1 = PWord::leaf(Letter::Plus);
  PWord sw2 = PWord::pair(PWord::leaf(Letter::Minus), PWord::leaf(Letter::Plus));
  PWord sw3 = PWord::leaf(Letter::Minus);
  out.push_back(schematic(
      "assoc_cancel", true,
      [](const MorphismTerm& t, std::size_t si,
         std::size_t ci) -> std::optional<std::pair<Window, Window>> {
        if (si >= t.slices.size() || ci >= t.slices[si].cells.size()) return std::nullopt;
        const auto* ac = std::get_if<AssocCell>(&t.slices[si].cells[ci]);
        if (!ac) return std::nullopt;
        auto [lhs, rhs] = assoc_windows(ac->dir, ac->w1, ac->w2, ac->w3);
        return check_window(t, si, ci, lhs, rhs);
      },
      {window_samples(assoc_windows(AssocDir::Right, sw1, sw3, sw2)),
       window_samples(assoc_windows(AssocDir::Left, sw2, sw1, sw3))}));
  out.push_back(schematic(
      "assoc_cancel:rev", false,
      [](const MorphismTerm& t, std::size_t si,
         std::size_t ci) -> std::optional<std::pair<Window, Window>> {
        if (si >= t.slices.size() || ci >= t.slices[si].cells.size()) return std::nullopt;
        const auto* idc = std::get_if<IdCell>(&t.slices[si].cells[ci]);
        if (!idc || !idc->word.is_pair()) return std::nullopt;
        const PWord& w = idc->word;
        if (w.left().is_pair()) {
          auto [lhs, rhs] =
              assoc_windows(AssocDir::Right, w.left().left(), w.left().right(), w.right());
          return check_window(t, si, ci, rhs, lhs);
        }
        if (w.right().is_pair()) {
          auto [lhs, rhs] =
              assoc_windows(AssocDir::Left, w.left(), w.right().left(), w.right().right());
          return check_window(t, si, ci, rhs, lhs);
        }
        return std::nullopt;
      },
      {flipped(window_samples(assoc_windows(AssocDir::Right, sw1, sw3, sw2)))}));
}

// Vertical interchange of cells acting on disjoint intervals.
std::optional<std::pair<Window, Window>> bind_exchange_down(const MorphismTerm& t,
                                                            std::size_t si,
                                                            std::size_t ci) {
  if (si + 1 >= t.slices.size()) return std::nullopt;
  const auto& top = t.slices[si].cells;
  const auto& bot = t.slices[si + 1].cells;
  if (ci >= top.size() || is_identity_cell(top[ci])) return std::nullopt;
  const Cell& g = top[ci];
  std::size_t left_edge = interval_count(top, ci, /*dom=*/false);
  std::size_t acc = 0, j0 = 0;
  for (; j0 < bot.size() && acc < left_edge; ++j0) acc += cell_dom(bot[j0]).size();
  if (acc != left_edge) return std::nullopt;
  std::size_t jh = j0;
  while (jh < bot.size() && is_identity_cell(bot[jh])) ++jh;
  if (jh >= bot.size()) return std::nullopt;
  const Cell& h = bot[jh];
  if (jh - j0 < cell_cod(g).size()) return std::nullopt;
  std::size_t between = (jh - j0) - cell_cod(g).size();
  std::size_t need_top = between + cell_dom(h).size();
  if (ci + 1 + need_top > top.size()) return std::nullopt;
  for (std::size_t k = 0; k < need_top; ++k)
    if (!is_identity_cell(top[ci + 1 + k])) return std::nullopt;

  Window lhs, rhs;
  lhs.rows.push_back(std::vector<Cell>(
      top.begin() + static_cast<std::ptrdiff_t>(ci),
      top.begin() + static_cast<std::ptrdiff_t>(ci + 1 + need_top)));
  lhs.rows.push_back(
      std::vector<Cell>(bot.begin() + static_cast<std::ptrdiff_t>(j0),
                        bot.begin() + static_cast<std::ptrdiff_t>(jh + 1)));
  std::vector<Cell> between_ids(
      bot.begin() + static_cast<std::ptrdiff_t>(j0 + cell_cod(g).size()),
      bot.begin() + static_cast<std::ptrdiff_t>(jh));
  std::vector<Cell> r0 = ids_of(cell_dom(g));
  r0.insert(r0.end(), between_ids.begin(), between_ids.end());
  r0.push_back(h);
  std::vector<Cell> r1{g};
  r1.insert(r1.end(), between_ids.begin(), between_ids.end());
  auto codh = ids_of(cell_cod(h));
  r1.insert(r1.end(), codh.begin(), codh.end());
  rhs.rows.push_back(std::move(r0));
  rhs.rows.push_back(std::move(r1));
  return std::make_pair(std::move(lhs), std::move(rhs));
}

std::optional<std::pair<Window, Window>> bind_exchange_up(const MorphismTerm& t,
                                                          std::size_t si, std::size_t ci) {
  if (si + 1 >= t.slices.size()) return std::nullopt;
  const auto& top = t.slices[si].cells;
  const auto& bot = t.slices[si + 1].cells;
  if (ci >= top.size() || is_identity_cell(top[ci])) return std::nullopt;
  const Cell& h = top[ci];
  // The partner generator sits below, left of h, with identities around.
  // The identities above cover dom(g) then the gap; those below cover the
  // gap then cod(h).
  std::size_t k0 = ci;
  while (k0 > 0 && is_identity_cell(top[k0 - 1])) --k0;
  for (std::size_t kk = k0; kk < ci; ++kk) {
    std::size_t edge = interval_count(top, kk, /*dom=*/false);
    std::size_t acc = 0, j = 0;
    for (; j < bot.size() && acc < edge; ++j) acc += cell_dom(bot[j]).size();
    if (acc != edge || j >= bot.size() || is_identity_cell(bot[j])) continue;
    const Cell& g = bot[j];
    std::size_t mid = ci - kk;
    if (mid < cell_dom(g).size()) continue;
    std::size_t between = mid - cell_dom(g).size();
    std::size_t need_bot = between + cell_cod(h).size();
    if (j + 1 + need_bot > bot.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < need_bot; ++k)
      if (!is_identity_cell(bot[j + 1 + k])) ok = false;
    if (!ok) continue;

    Window lhs, rhs;
    lhs.rows.push_back(std::vector<Cell>(
        top.begin() + static_cast<std::ptrdiff_t>(kk),
        top.begin() + static_cast<std::ptrdiff_t>(ci + 1)));
    lhs.rows.push_back(std::vector<Cell>(
        bot.begin() + static_cast<std::ptrdiff_t>(j),
        bot.begin() + static_cast<std::ptrdiff_t>(j + 1 + need_bot)));
    std::vector<Cell> between_ids(
        top.begin() + static_cast<std::ptrdiff_t>(kk + cell_dom(g).size()),
        top.begin() + static_cast<std::ptrdiff_t>(ci));
    std::vector<Cell> r0{g};
    r0.insert(r0.end(), between_ids.begin(), between_ids.end());
    auto domh = ids_of(cell_dom(h));
    r0.insert(r0.end(), domh.begin(), domh.end());
    std::vector<Cell> r1 = ids_of(cell_cod(g));
    r1.insert(r1.end(), between_ids.begin(), between_ids.end());
    r1.push_back(h);
    rhs.rows.push_back(std::move(r0));
    rhs.rows.push_back(std::move(r1));
    // The window starts at kk, left of the anchor; apply_move rediscovers
    // the true offset by scanning back from the anchor.
    return std::make_pair(std::move(lhs), std::move(rhs));
  }
  return std::nullopt;
}

void build_exchange(std::vector<MoveVariant>& out) {
  MorphismTerm s_lhs = parse_term("cup[+][-] id[+] id[+]\nid[+] id[-] X+dd\n");
  MorphismTerm s_rhs = parse_term("dom [+][+]\nX+dd\ncup[+][-] id[+] id[+]\n");
  out.push_back(schematic("exchange:down", false, bind_exchange_down, {{s_lhs, s_rhs}}));
  out.push_back(schematic("exchange:up", false, bind_exchange_up, {{s_rhs, s_lhs}}));
  build_slides(out);
}

std::vector<Move> build_library() {
  std::vector<Move> lib;
  auto add = [&lib](MoveId id, void (*builder)(std::vector<MoveVariant>&)) {
    Move m{id, {}};
    builder(m.variants);
    lib.push_back(std::move(m));
  };
  add(MoveId::R1Framed, build_r1_framed);
  add(MoveId::R2, build_r2);
  add(MoveId::R3, build_r3);
  add(MoveId::VR2, build_vr2);
  add(MoveId::VR3, build_vr3);
  add(MoveId::Mixed, build_mixed);
  add(MoveId::Zigzag, build_zigzag);
  add(MoveId::Puncture, build_puncture);
  add(MoveId::Tear, build_tear);
  add(MoveId::UnitCounit, build_unit_counit);
  add(MoveId::AssocCancel, build_assoc_cancel);
  add(MoveId::Exchange, build_exchange);
  return lib;
}

}  // namespace

std::string move_id_str(MoveId id) {
  switch (id) {
    case MoveId::R1Framed: return "r1f";
    case MoveId::R2: return "r2";
    case MoveId::R3: return "r3";
    case MoveId::VR2: return "vr2";
    case MoveId::VR3: return "vr3";
    case MoveId::Mixed: return "mixed";
    case MoveId::Zigzag: return "zigzag";
    case MoveId::Puncture: return "puncture";
    case MoveId::Tear: return "tear";
    case MoveId::UnitCounit: return "unit_counit";
    case MoveId::AssocCancel: return "assoc_cancel";
    case MoveId::Exchange: return "exchange";
  }
  return "?";
}

std::optional<MoveId> move_id_parse(const std::string& s) {
  for (const Move& m : move_library())
    if (move_id_str(m.id) == s) return m.id;
  return std::nullopt;
}

const std::vector<Move>& move_library() {
  static const std::vector<Move> lib = build_library();
  return lib;
}

const Move& move(MoveId id) {
  for (const Move& m : move_library())
    if (m.id == id) return m;
  throw DomainError("unknown move");
}

std::vector<MatchLocation> find_matches(const MorphismTerm& t, const Move& m) {
  std::vector<MatchLocation> out;
  for (std::size_t si = 0; si < t.slices.size(); ++si) {
    for (std::size_t ci = 0; ci <= t.slices[si].cells.size(); ++ci) {
      for (const MoveVariant& v : m.variants) {
        if (v.bind && v.bind(t, si, ci)) out.push_back({si, ci, v.name});
      }
    }
  }
  return out;
}

MorphismTerm apply_move(const MorphismTerm& t, const Move& m, const MatchLocation& loc) {
  const MoveVariant* variant = nullptr;
  for (const MoveVariant& v : m.variants)
    if (v.name == loc.variant) variant = &v;
  if (!variant || !variant->bind)
    throw InvalidLocationError("unknown variant: " + loc.variant);
  auto bound = variant->bind(t, loc.slice_index, loc.cell_offset);
  if (!bound)
    throw InvalidLocationError("move " + move_id_str(m.id) + "/" + loc.variant +
                               " does not match at slice " +
                               std::to_string(loc.slice_index) + ", cell " +
                               std::to_string(loc.cell_offset));
  const Window& lhs = bound->first;
  const Window& rhs = bound->second;
  // Anchor row offset: schematic binders may extend the window left of the
  // anchor; recover the true offsets by searching near the anchor.
  std::optional<std::vector<std::size_t>> offsets;
  for (std::size_t start = loc.cell_offset + 1; start-- > 0;) {
    offsets = locate(t, loc.slice_index, start, lhs);
    if (offsets) break;
  }
  if (!offsets) throw InvalidLocationError("pattern vanished during rebind");
  MorphismTerm out = t;
  for (std::size_t r = 0; r < lhs.rows.size(); ++r) {
    auto& cells = out.slices[loc.slice_index + r].cells;
    auto begin = cells.begin() + static_cast<std::ptrdiff_t>((*offsets)[r]);
    cells.erase(begin, begin + static_cast<std::ptrdiff_t>(lhs.rows[r].size()));
    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>((*offsets)[r]),
                 rhs.rows[r].begin(), rhs.rows[r].end());
  }
  // Rows emptied by the rewrite are identities of the unit object.
  std::erase_if(out.slices, [](const Slice& s) { return s.cells.empty(); });
  require_valid(out);
  return out;
}

MorphismTerm simplify(const MorphismTerm& t) {
  MorphismTerm cur = t;
  require_valid(cur);
  bool progress = true;
  while (progress) {
    progress = false;
    std::size_t before = cur.slices.size();
    std::erase_if(cur.slices, [](const Slice& s) {
      for (const Cell& c : s.cells)
        if (!is_identity_cell(c)) return false;
      return true;
    });
    if (cur.slices.size() != before) progress = true;
    for (const Move& m : move_library()) {
      if (progress) break;
      for (std::size_t si = 0; si < cur.slices.size() && !progress; ++si) {
        for (std::size_t ci = 0; ci <= cur.slices[si].cells.size() && !progress; ++ci) {
          for (const MoveVariant& v : m.variants) {
            if (!v.decreasing) continue;
            if (v.bind(cur, si, ci)) {
              cur = apply_move(cur, m, {si, ci, v.name});
              progress = true;
              break;
            }
          }
        }
      }
    }
  }
  return cur;
}

Equivalence equivalent_bounded(const MorphismTerm& a, const MorphismTerm& b,
                               std::size_t budget) {
  if (a.dom != b.dom || a.cod != b.cod)
    throw BoundaryMismatch("equivalence requires matching boundaries: " + a.dom.str() +
                           " -> " + a.cod.str() + " vs " + b.dom.str() + " -> " +
                           b.cod.str());
  MorphismTerm start = simplify(a);
  MorphismTerm goal = simplify(b);
  std::string goal_key = render(goal);
  struct Node {
    MorphismTerm term;
    std::vector<AppliedMove> path;
  };
  std::deque<Node> frontier;
  std::unordered_set<std::string> seen;
  if (render(start) == goal_key) return {true, {}};
  frontier.push_back({start, {}});
  seen.insert(render(start));
  std::size_t expanded = 0;
  while (!frontier.empty() && expanded < budget) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    ++expanded;
    for (const Move& m : move_library()) {
      for (const MatchLocation& loc : find_matches(node.term, m)) {
        MorphismTerm next = apply_move(node.term, m, loc);
        std::string key = render(next);
        if (!seen.insert(key).second) continue;
        Node child{std::move(next), node.path};
        child.path.push_back({m.id, loc});
        if (key == goal_key) return {true, child.path};
        frontier.push_back(std::move(child));
      }
    }
  }
  return {false, {}};
}

}  // namespace vtangle
