#include "vtangle/gauss.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vtangle {

namespace {

struct GaussCursor {
  const std::string& s;
  std::size_t pos = 0;
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, 1, static_cast<int>(pos) + 1);
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
};

}  // namespace

GaussCode parse_gauss(const std::string& text) {
  GaussCode g;
  GaussCursor c{text};
  // Strip spaces up front; positions still refer to the original string.
  std::vector<GaussPass> current;
  bool component_open = !text.empty();
  bool current_is_bare_loop = false;
  auto close_component = [&] {
    g.components.push_back(current);
    current.clear();
    current_is_bare_loop = false;
  };
  while (!c.done()) {
    char ch = c.peek();
    if (ch == ' ' || ch == '\t') {
      ++c.pos;
      continue;
    }
    if (ch == ',') {
      ++c.pos;
      close_component();
      component_open = true;
      continue;
    }
    if (ch == 'o') {
      if (!current.empty() || current_is_bare_loop) c.fail("'o' must stand alone in a component");
      current_is_bare_loop = true;
      ++c.pos;
      continue;
    }
    if (ch == 'O' || ch == 'U') {
      if (current_is_bare_loop) c.fail("'o' must stand alone in a component");
      Layer layer = ch == 'O' ? Layer::Over : Layer::Under;
      ++c.pos;
      if (!isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected crossing label");
      int label = 0;
      while (isdigit(static_cast<unsigned char>(c.peek()))) {
        label = label * 10 + (c.peek() - '0');
        ++c.pos;
      }
      char sg = c.peek();
      if (sg != '+' && sg != '-') c.fail("expected crossing sign '+' or '-'");
      ++c.pos;
      current.push_back({label, layer, sg == '+' ? Sign::Pos : Sign::Neg});
      continue;
    }
    c.fail(std::string("unexpected character '") + ch + "'");
  }
  if (component_open) close_component();

  // Pairing invariants.
  std::map<int, std::vector<GaussPass>> seen;
  for (const auto& comp : g.components)
    for (const auto& p : comp) seen[p.label].push_back(p);
  for (const auto& [label, ps] : seen) {
    if (ps.size() != 2)
      throw PairingError("label " + std::to_string(label) + " occurs " +
                         std::to_string(ps.size()) + " times, expected 2");
    if (ps[0].layer == ps[1].layer)
      throw PairingError("label " + std::to_string(label) +
                         " must occur once over and once under");
    if (ps[0].sign != ps[1].sign)
      throw PairingError("label " + std::to_string(label) +
                         " has disagreeing signs at its two passes");
  }
  return g;
}

std::string gauss_str(const GaussCode& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (i) os << ",";
    if (g.components[i].empty()) {
      os << "o";
      continue;
    }
    for (const auto& p : g.components[i]) {
      os << (p.layer == Layer::Over ? 'O' : 'U') << p.label
         << (p.sign == Sign::Pos ? '+' : '-');
    }
  }
  return os.str();
}

namespace {

// Sweep state: the open strand ends hanging at the current lower boundary.
struct Builder {
  struct End {
    Letter letter;
    int id;
  };
  std::vector<End> boundary;
  std::vector<Slice> slices;
  int next_id = 0;

  std::size_t find(int id) const {
    for (std::size_t i = 0; i < boundary.size(); ++i)
      if (boundary[i].id == id) return i;
    throw DomainError("strand end not found");
  }

  std::vector<Cell> id_prefix(std::size_t from, std::size_t to) const {
    std::vector<Cell> cells;
    for (std::size_t i = from; i < to; ++i)
      cells.push_back(IdCell{PWord::leaf(boundary[i].letter)});
    return cells;
  }

  // Emits one slice with `cell` covering boundary[k, k+consumed) and
  // identities elsewhere.
  void emit(std::size_t k, std::size_t consumed, const Cell& cell) {
    Slice s;
    auto pre = id_prefix(0, k);
    s.cells.insert(s.cells.end(), pre.begin(), pre.end());
    s.cells.push_back(cell);
    auto post = id_prefix(k + consumed, boundary.size());
    s.cells.insert(s.cells.end(), post.begin(), post.end());
    slices.push_back(std::move(s));
  }

  // Birth at the right edge; returns ids of the (+, -) legs.
  std::pair<int, int> birth() {
    emit(boundary.size(), 0, CupCell{CupOrient::PM});
    int plus = next_id++, minus = next_id++;
    boundary.push_back({Letter::Plus, plus});
    boundary.push_back({Letter::Minus, minus});
    return {plus, minus};
  }

  void vswap(std::size_t k) {
    emit(k, 2,
         VirtualCell{PWord::leaf(boundary[k].letter), PWord::leaf(boundary[k + 1].letter)});
    std::swap(boundary[k], boundary[k + 1]);
  }

  // Walks the end at `from` to position `to` by adjacent virtual swaps.
  void walk(std::size_t from, std::size_t to) {
    while (from > to) {
      vswap(from - 1);
      --from;
    }
    while (from < to) {
      vswap(from);
      ++from;
    }
  }

  void cross(std::size_t k, Sign sign) {
    emit(k, 2, CrossingCell{sign, Dir::Down, Dir::Down});
    std::swap(boundary[k], boundary[k + 1]);
  }

  // Joins the + end `plus_id` with the - end `minus_id`. The required
  // left/right order is part of the diagram's turning bookkeeping: the
  // walking end moves leftward.
  void close(int plus_id, int minus_id, bool plus_left) {
    std::size_t pp = find(plus_id), mp = find(minus_id);
    if (plus_left) {
      if (pp < mp)
        walk(mp, pp + 1);  // minus walks left
      else
        walk(pp, mp);  // plus walks left past minus
      std::size_t k = find(plus_id);
      emit(k, 2, CapCell{CupOrient::PM});
      boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(k),
                     boundary.begin() + static_cast<std::ptrdiff_t>(k) + 2);
    } else {
      if (mp < pp)
        walk(pp, mp + 1);  // plus walks left
      else
        walk(mp, pp);  // minus walks left past plus
      std::size_t k = find(minus_id);
      emit(k, 2, CapCell{CupOrient::MP});
      boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(k),
                     boundary.begin() + static_cast<std::ptrdiff_t>(k) + 2);
    }
  }
};

struct OpenLabel {
  int partner_in;   // upward leg awaiting the second visit
  int partner_out;  // the strand continuing below the crossing
};

// Crossing depth order for the realization. Journeys are cut into maximal
// runs that descend through the stacked crossings; every backward step costs
// one wrap of the strand around the diagram, so the order is chosen to
// minimize the number of backward consecutive-pass pairs (exact subset DP,
// deterministic tie-break). Falls back to first-appearance order for large
// codes.
std::map<int, int> depth_order(const GaussCode& g) {
  std::vector<int> labels;
  for (const auto& comp : g.components)
    for (const auto& p : comp)
      if (std::find(labels.begin(), labels.end(), p.label) == labels.end())
        labels.push_back(p.label);
  std::sort(labels.begin(), labels.end());
  const int c = static_cast<int>(labels.size());
  std::map<int, int> rank;
  if (c == 0) return rank;
  std::map<int, int> idx;
  for (int i = 0; i < c; ++i) idx[labels[i]] = i;

  constexpr int kExactLimit = 16;
  if (c > kExactLimit) {
    for (int i = 0; i < c; ++i) rank[labels[i]] = i;
    return rank;
  }
  std::vector<std::vector<int>> mult(c, std::vector<int>(c, 0));
  for (const auto& comp : g.components)
    for (std::size_t i = 1; i < comp.size(); ++i)
      mult[idx.at(comp[i - 1].label)][idx.at(comp[i].label)]++;

  const std::size_t full = std::size_t(1) << c;
  std::vector<int> dp(full, 1 << 29), choice(full, -1);
  dp[0] = 0;
  for (std::size_t S = 0; S < full; ++S) {
    if (dp[S] >= (1 << 29)) continue;
    for (int v = 0; v < c; ++v) {
      if (S >> v & 1) continue;
      int cost = 0;
      for (int u = 0; u < c; ++u)
        if (S >> u & 1) cost += mult[v][u];
      std::size_t T = S | std::size_t(1) << v;
      if (dp[S] + cost < dp[T]) {
        dp[T] = dp[S] + cost;
        choice[T] = v;
      }
    }
  }
  std::size_t S = full - 1;
  int r = c - 1;
  while (S) {
    int v = choice[S];
    rank[labels[v]] = r--;
    S ^= std::size_t(1) << v;
  }
  return rank;
}

}  // namespace

MorphismTerm compile_gauss(const GaussCode& g) {
  Builder b;
  std::map<int, int> depth = depth_order(g);
  std::map<int, OpenLabel> open;
  for (const auto& comp : g.components) {
    auto [head, tail] = b.birth();
    int prev_depth = -1;
    for (const auto& pass : comp) {
      // Moving to a crossing at most as deep as the previous one wraps the
      // strand once around the diagram.
      bool boundary = prev_depth >= 0 && depth.at(pass.label) <= prev_depth;
      auto it = open.find(pass.label);
      if (it == open.end()) {
        if (boundary) {
          // Inject the full turn on the head line before crossing.
          auto [next_head, turn_leg] = b.birth();
          b.close(head, turn_leg, /*plus_left=*/true);
          head = next_head;
        }
        // First visit: birth the partner strand and cross with it.
        auto [feed, partner_in] = b.birth();
        bool head_left = (pass.layer == Layer::Over) == (pass.sign == Sign::Pos);
        if (head_left) {
          b.walk(b.find(feed), b.find(head) + 1);
          b.cross(b.find(head), pass.sign);
        } else {
          b.walk(b.find(feed), b.find(head));
          b.cross(b.find(feed), pass.sign);
        }
        open[pass.label] = {partner_in, feed};
      } else {
        // Second visit: the head dives into the waiting crossing and
        // continues as the strand emerging below it.
        b.close(head, it->second.partner_in, /*plus_left=*/boundary);
        head = it->second.partner_out;
        open.erase(it);
      }
      prev_depth = depth.at(pass.label);
    }
    b.close(head, tail, /*plus_left=*/true);
  }
  MorphismTerm t{SeqObject::unit(), SeqObject::unit(), std::move(b.slices)};
  require_valid(t);
  return t;
}

}  // namespace vtangle
