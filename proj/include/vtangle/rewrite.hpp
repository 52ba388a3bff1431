#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vtangle/term.hpp"

namespace vtangle {

enum class MoveId {
  R1Framed,
  R2,
  R3,
  VR2,
  VR3,
  Mixed,
  Zigzag,
  Puncture,
  Tear,
  UnitCounit,
  AssocCancel,
  Exchange,
};

std::string move_id_str(MoveId id);
std::optional<MoveId> move_id_parse(const std::string& s);

// A rewrite window: consecutive slices, one contiguous cell range per row,
// rectangular in the interval grid.
struct Window {
  std::vector<std::vector<Cell>> rows;
};

struct MatchLocation {
  std::size_t slice_index;
  std::size_t cell_offset;  // anchor cell in the first window row
  std::string variant;
};

// One oriented relation instance. Concrete variants carry literal windows;
// schematic ones (word-parametrised) bind their windows from the anchor
// cell. Both sides of every relation are present in the library.
struct MoveVariant {
  std::string name;
  bool decreasing = false;  // usable by simplify
  std::function<std::optional<std::pair<Window, Window>>(const MorphismTerm&, std::size_t,
                                                         std::size_t)>
      bind;
  // Representative instantiations for the relation suite.
  std::vector<std::pair<MorphismTerm, MorphismTerm>> samples;
};

struct Move {
  MoveId id;
  std::vector<MoveVariant> variants;
};

const std::vector<Move>& move_library();
const Move& move(MoveId id);

std::vector<MatchLocation> find_matches(const MorphismTerm& t, const Move& m);
MorphismTerm apply_move(const MorphismTerm& t, const Move& m, const MatchLocation& loc);

// Applies size-decreasing move directions and elides all-identity slices
// until no further reduction applies. Evaluation-preserving; terminates by
// the (non-identity cells, slices) measure.
MorphismTerm simplify(const MorphismTerm& t);

struct AppliedMove {
  MoveId move;
  MatchLocation loc;
};

struct Equivalence {
  bool equal = false;
  std::vector<AppliedMove> path;  // replayable on simplify(lhs) when equal
};

// Breadth-first search over move applications from simplify(a) towards
// simplify(b); budget counts expanded nodes. A negative result is UNKNOWN,
// never a disproof.
Equivalence equivalent_bounded(const MorphismTerm& a, const MorphismTerm& b,
                               std::size_t budget);

}  // namespace vtangle
