#include "vtangle/dsl.hpp"

#include <json.hpp>
#include <sstream>
#include <vector>

namespace vtangle {

namespace {

// Cursor over one line of input, 1-based positions for error reporting.
struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line;
  Cursor(const std::string& str, int line_) : s(str), line(line_) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, line, static_cast<int>(pos) + 1);
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  char take() {
    if (done()) fail("unexpected end of input");
    return s[pos++];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  }
};

PWord parse_node(Cursor& c) {
  char ch = c.peek();
  if (ch == '+' || ch == '-') {
    c.take();
    return PWord::leaf(ch == '+' ? Letter::Plus : Letter::Minus);
  }
  if (ch == '(') {
    c.take();
    PWord l = parse_node(c);
    PWord r = parse_node(c);
    c.expect(')');
    return PWord::pair(l, r);
  }
  c.fail("expected '+', '-' or '('");
}

// Content of one bracket: empty, a single node, or exactly two (a pair).
PWord parse_word_body(Cursor& c) {
  if (c.peek() == ']') return PWord();
  PWord first = parse_node(c);
  if (c.peek() == ']') return first;
  PWord second = parse_node(c);
  if (c.peek() != ']') c.fail("ambiguous word: parenthesise groups of more than two");
  return PWord::pair(first, second);
}

PWord parse_interval(Cursor& c) {
  c.expect('[');
  PWord w = parse_word_body(c);
  c.expect(']');
  return w;
}

SeqObject parse_object_at(Cursor& c) {
  if (c.accept('.')) return SeqObject::unit();
  std::vector<PWord> intervals;
  while (c.peek() == '[') intervals.push_back(parse_interval(c));
  if (intervals.empty()) c.fail("expected an object ('.' or '[...]')");
  return SeqObject(std::move(intervals));
}

Letter single_letter(Cursor& c, const PWord& w) {
  if (!w.is_leaf()) c.fail("expected a single-letter interval");
  return w.leaf_letter();
}

Cell parse_cell(Cursor& c) {
  auto starts = [&](const char* kw) {
    std::string k(kw);
    if (c.s.compare(c.pos, k.size(), k) == 0) {
      c.pos += k.size();
      return true;
    }
    return false;
  };
  if (starts("id")) return IdCell{parse_interval(c)};
  if (starts("X")) {
    char sg = c.take();
    if (sg != '+' && sg != '-') c.fail("crossing sign must be '+' or '-'");
    auto dir = [&](char ch) {
      if (ch == 'd') return Dir::Down;
      if (ch == 'u') return Dir::Up;
      c.fail("crossing direction must be 'd' or 'u'");
    };
    char a = c.take(), b = c.take();
    return CrossingCell{sg == '+' ? Sign::Pos : Sign::Neg, dir(a), dir(b)};
  }
  if (starts("V")) {
    PWord l = parse_interval(c);
    PWord r = parse_interval(c);
    if (l.is_empty() || r.is_empty()) c.fail("virtual crossing needs nonempty words");
    return VirtualCell{l, r};
  }
  if (starts("cup") || starts("cap")) {
    bool is_cup = c.s.compare(c.pos - 3, 3, "cup") == 0;
    Letter a = single_letter(c, parse_interval(c));
    Letter b = single_letter(c, parse_interval(c));
    if (a == b) c.fail("cup/cap must bound opposite orientations");
    CupOrient o = a == Letter::Plus ? CupOrient::PM : CupOrient::MP;
    if (is_cup) return CupCell{o};
    return CapCell{o};
  }
  if (starts("split")) {
    PWord l = parse_interval(c), r = parse_interval(c);
    return SplitCell{l, r};
  }
  if (starts("merge")) {
    PWord l = parse_interval(c), r = parse_interval(c);
    return MergeCell{l, r};
  }
  if (starts("unit")) return UnitCell{};
  if (starts("counit")) return CounitCell{};
  if (starts("assocR") || starts("assocL")) {
    bool right = c.s[c.pos - 1] == 'R';
    PWord w1 = parse_interval(c), w2 = parse_interval(c), w3 = parse_interval(c);
    return AssocCell{right ? AssocDir::Right : AssocDir::Left, w1, w2, w3};
  }
  c.fail("unknown cell");
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  lines.push_back(cur);
  return lines;
}

std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  return p == std::string::npos ? line : line.substr(0, p);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

SeqObject parse_object(const std::string& text) {
  Cursor c(text, 1);
  c.skip_ws();
  SeqObject o = parse_object_at(c);
  c.skip_ws();
  if (!c.done()) c.fail("trailing input after object");
  return o;
}

PWord parse_pword(const std::string& text) {
  std::string wrapped = "[" + text + "]";
  Cursor c(wrapped, 1);
  return parse_interval(c);
}

MorphismTerm parse_term(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  bool have_header = false;
  SeqObject header_dom;
  std::vector<Slice> slices;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string body = strip_comment(lines[li]);
    if (blank(body)) continue;
    Cursor c(body, static_cast<int>(li) + 1);
    c.skip_ws();
    if (!have_header && slices.empty() && c.s.compare(c.pos, 4, "dom ") == 0) {
      c.pos += 4;
      c.skip_ws();
      header_dom = parse_object_at(c);
      c.skip_ws();
      if (!c.done()) c.fail("trailing input after header object");
      have_header = true;
      continue;
    }
    Slice s;
    while (true) {
      c.skip_ws();
      if (c.done()) break;
      s.cells.push_back(parse_cell(c));
    }
    if (s.cells.empty()) continue;
    slices.push_back(std::move(s));
  }

  MorphismTerm t;
  if (slices.empty()) {
    t = MorphismTerm::identity(have_header ? header_dom : SeqObject::unit());
  } else {
    t.dom = have_header ? header_dom : slice_dom(slices.front());
    t.slices = std::move(slices);
    t.cod = slice_cod(t.slices.back());
  }
  ValidationReport report = validate(t);
  if (!report.empty())
    throw ValidationError("parsed term is invalid: " + report.front().message);
  return t;
}

std::string render(const MorphismTerm& t) {
  if (t.dom.is_unit() && t.cod.is_unit() && t.slices.empty()) return "";
  std::ostringstream os;
  os << "dom " << t.dom.str() << "\n";
  for (const Slice& s : t.slices) {
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      if (i) os << ' ';
      os << cell_str(s.cells[i]);
    }
    os << "\n";
  }
  return os.str();
}

namespace {

using nlohmann::json;

json object_to_json(const SeqObject& o) {
  json arr = json::array();
  for (const auto& w : o.intervals()) arr.push_back(w.str());
  return arr;
}

SeqObject object_from_json(const json& j) {
  std::vector<PWord> intervals;
  for (const auto& w : j) intervals.push_back(parse_pword(w.get<std::string>()));
  return SeqObject(std::move(intervals));
}

json cell_to_json(const Cell& c) {
  struct V {
    json operator()(const IdCell& x) const {
      return {{"kind", "id"}, {"word", x.word.str()}};
    }
    json operator()(const CrossingCell& x) const {
      std::string dirs;
      dirs += x.d1 == Dir::Down ? 'd' : 'u';
      dirs += x.d2 == Dir::Down ? 'd' : 'u';
      return {{"kind", "crossing"},
              {"sign", x.sign == Sign::Pos ? "+" : "-"},
              {"dirs", dirs}};
    }
    json operator()(const VirtualCell& x) const {
      return {{"kind", "virtual"}, {"left", x.left.str()}, {"right", x.right.str()}};
    }
    json operator()(const CupCell& x) const {
      return {{"kind", "cup"}, {"orient", x.orient == CupOrient::PM ? "pm" : "mp"}};
    }
    json operator()(const CapCell& x) const {
      return {{"kind", "cap"}, {"orient", x.orient == CupOrient::PM ? "pm" : "mp"}};
    }
    json operator()(const SplitCell& x) const {
      return {{"kind", "split"}, {"left", x.left.str()}, {"right", x.right.str()}};
    }
    json operator()(const MergeCell& x) const {
      return {{"kind", "merge"}, {"left", x.left.str()}, {"right", x.right.str()}};
    }
    json operator()(const UnitCell&) const { return {{"kind", "unit"}}; }
    json operator()(const CounitCell&) const { return {{"kind", "counit"}}; }
    json operator()(const AssocCell& x) const {
      return {{"kind", "assoc"},
              {"dir", x.dir == AssocDir::Right ? "right" : "left"},
              {"w1", x.w1.str()},
              {"w2", x.w2.str()},
              {"w3", x.w3.str()}};
    }
  };
  return std::visit(V{}, c);
}

Cell cell_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  auto word = [&](const char* key) { return parse_pword(j.at(key).get<std::string>()); };
  if (kind == "id") return IdCell{word("word")};
  if (kind == "crossing") {
    std::string sign = j.at("sign").get<std::string>();
    std::string dirs = j.at("dirs").get<std::string>();
    if (dirs.size() != 2) throw DomainError("crossing dirs must have length 2");
    auto d = [](char ch) { return ch == 'd' ? Dir::Down : Dir::Up; };
    return CrossingCell{sign == "+" ? Sign::Pos : Sign::Neg, d(dirs[0]), d(dirs[1])};
  }
  if (kind == "virtual") return VirtualCell{word("left"), word("right")};
  if (kind == "cup" || kind == "cap") {
    CupOrient o =
        j.at("orient").get<std::string>() == "pm" ? CupOrient::PM : CupOrient::MP;
    if (kind == "cup") return CupCell{o};
    return CapCell{o};
  }
  if (kind == "split") return SplitCell{word("left"), word("right")};
  if (kind == "merge") return MergeCell{word("left"), word("right")};
  if (kind == "unit") return UnitCell{};
  if (kind == "counit") return CounitCell{};
  if (kind == "assoc")
    return AssocCell{j.at("dir").get<std::string>() == "right" ? AssocDir::Right
                                                               : AssocDir::Left,
                     word("w1"), word("w2"), word("w3")};
  throw DomainError("unknown cell kind in json: " + kind);
}

}  // namespace

std::string term_to_json(const MorphismTerm& t) {
  json slices = json::array();
  for (const Slice& s : t.slices) {
    json row = json::array();
    for (const Cell& c : s.cells) row.push_back(cell_to_json(c));
    slices.push_back(row);
  }
  json j = {{"dom", object_to_json(t.dom)},
            {"cod", object_to_json(t.cod)},
            {"slices", slices}};
  return j.dump(2);
}

MorphismTerm term_from_json(const std::string& text) {
  json j = json::parse(text);
  MorphismTerm t;
  t.dom = object_from_json(j.at("dom"));
  t.cod = object_from_json(j.at("cod"));
  for (const auto& row : j.at("slices")) {
    Slice s;
    for (const auto& cj : row) s.cells.push_back(cell_from_json(cj));
    t.slices.push_back(std::move(s));
  }
  ValidationReport report = validate(t);
  if (!report.empty())
    throw ValidationError("term json is invalid: " + report.front().message);
  return t;
}

}  // namespace vtangle
