#include "vtangle/oracle.hpp"

#include <array>
#include <variant>

namespace vtangle {

namespace {

constexpr std::size_t kMaxCrossings = 20;

// Half-turn contributions. A cup or cap edge bends the strand by half a
// turn; the sign depends on the traversal direction.
struct Edge {
  std::size_t a, b;   // node ids
  int turn_ab;        // half-turns picked up travelling a -> b
};

struct Wiring {
  std::vector<Edge> edges;
  std::size_t nodes = 0;
};

struct LoopData {
  std::vector<int> turns;  // net half-turn count per loop (can be negative)
};

void check_preconditions(const MorphismTerm& t) {
  if (!t.dom.is_unit() || !t.cod.is_unit())
    throw NotClosedError("state sum requires a closed term");
  require_valid(t);
  for (const auto& b : t.boundaries())
    for (const auto& w : b.intervals())
      if (w.letter_count() != 1)
        throw NotStrictError("state sum requires one-letter intervals");
}

// Builds the port graph for one total smoothing.
Wiring wire(const MorphismTerm& t, const StateAssignment& s) {
  // Node id for port p at boundary b: offset[b] + p.
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  std::vector<SeqObject> bs = t.boundaries();
  for (const auto& o : bs) {
    offset.push_back(total);
    total += o.size();
  }
  Wiring w;
  w.nodes = total;
  std::size_t xi = 0;
  for (std::size_t si = 0; si < t.slices.size(); ++si) {
    std::size_t tp = 0, bp = 0;
    auto top = [&](std::size_t k) { return offset[si] + tp + k; };
    auto bot = [&](std::size_t k) { return offset[si + 1] + bp + k; };
    for (const Cell& c : t.slices[si].cells) {
      if (std::holds_alternative<IdCell>(c)) {
        w.edges.push_back({top(0), bot(0), 0});
        tp += 1;
        bp += 1;
      } else if (std::holds_alternative<VirtualCell>(c)) {
        w.edges.push_back({top(0), bot(1), 0});
        w.edges.push_back({top(1), bot(0), 0});
        tp += 2;
        bp += 2;
      } else if (std::holds_alternative<CupCell>(c)) {
        w.edges.push_back({bot(0), bot(1), -1});  // left-to-right under the arch
        bp += 2;
      } else if (std::holds_alternative<CapCell>(c)) {
        w.edges.push_back({top(0), top(1), 1});
        tp += 2;
      } else if (const auto* x = std::get_if<CrossingCell>(&c)) {
        Smoothing sm = s.choice.at(xi++);
        // The weight-A smoothing opens the crossing along the strands when
        // the top-left/bottom-right strand is the over strand.
        bool a_is_vertical = crossing_over_is_tlbr(*x);
        bool vertical = (sm == Smoothing::A) == a_is_vertical;
        if (vertical) {
          w.edges.push_back({top(0), bot(0), 0});
          w.edges.push_back({top(1), bot(1), 0});
        } else {
          w.edges.push_back({top(0), top(1), 1});
          w.edges.push_back({bot(0), bot(1), -1});
        }
        tp += 2;
        bp += 2;
      } else {
        throw NotStrictError("state sum does not admit bracket generators");
      }
    }
  }
  return w;
}

LoopData trace(const Wiring& w) {
  // Every node of a closed diagram has degree exactly 2.
  std::vector<std::array<int, 2>> inc(w.nodes, {-1, -1});
  for (std::size_t e = 0; e < w.edges.size(); ++e) {
    for (std::size_t endpoint : {w.edges[e].a, w.edges[e].b}) {
      if (inc[endpoint][0] < 0)
        inc[endpoint][0] = static_cast<int>(e);
      else if (inc[endpoint][1] < 0)
        inc[endpoint][1] = static_cast<int>(e);
      else
        throw DomainError("port has degree > 2");
    }
  }
  LoopData loops;
  std::vector<bool> used(w.edges.size(), false);
  for (std::size_t e0 = 0; e0 < w.edges.size(); ++e0) {
    if (used[e0]) continue;
    int turning = 0;
    std::size_t e = e0;
    std::size_t at = w.edges[e0].a;  // walk starting a -> b
    do {
      used[e] = true;
      const Edge& ed = w.edges[e];
      bool forward = (at == ed.a);
      turning += forward ? ed.turn_ab : -ed.turn_ab;
      at = forward ? ed.b : ed.a;
      // Continue along the other edge at this node.
      std::size_t next =
          static_cast<std::size_t>(inc[at][0]) == e ? static_cast<std::size_t>(inc[at][1])
                                                    : static_cast<std::size_t>(inc[at][0]);
      e = next;
    } while (!used[e]);
    loops.turns.push_back(turning);
  }
  return loops;
}

LaurentPoly loop_weight(int half_turns) {
  int r = half_turns / 2;
  if (r < 0) r = -r;
  if (r == 0) return LaurentPoly::monomial(0, GaussianInt(2));
  GaussianInt sign(r % 2 == 0 ? 1 : -1);
  return LaurentPoly::monomial(2 * r, sign) + LaurentPoly::monomial(-2 * r, sign);
}

}  // namespace

std::size_t real_crossing_count(const MorphismTerm& t) {
  std::size_t n = 0;
  for (const auto& s : t.slices)
    for (const auto& c : s.cells)
      if (std::holds_alternative<CrossingCell>(c)) ++n;
  return n;
}

std::size_t loop_count(const MorphismTerm& t, const StateAssignment& s) {
  check_preconditions(t);
  if (s.choice.size() != real_crossing_count(t))
    throw DomainError("state assignment must cover every real crossing");
  return trace(wire(t, s)).turns.size();
}

LaurentPoly bracket_oracle(const MorphismTerm& t) {
  check_preconditions(t);
  std::size_t c = real_crossing_count(t);
  if (c > kMaxCrossings)
    throw DomainError("state enumeration capped at " + std::to_string(kMaxCrossings) +
                      " crossings");
  LaurentPoly total;
  StateAssignment state;
  state.choice.assign(c, Smoothing::A);
  for (std::size_t mask = 0; mask < (std::size_t(1) << c); ++mask) {
    int a = 0, b = 0;
    for (std::size_t k = 0; k < c; ++k) {
      bool is_b = (mask >> k) & 1;
      state.choice[k] = is_b ? Smoothing::B : Smoothing::A;
      (is_b ? b : a)++;
    }
    LoopData loops = trace(wire(t, state));
    LaurentPoly term = LaurentPoly::monomial(a - b, GaussianInt(1));
    for (int turns : loops.turns) term *= loop_weight(turns);
    total += term;
  }
  return total;
}

}  // namespace vtangle
