#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vtangle/objects.hpp"

namespace vtangle {

enum class Sign { Pos, Neg };
enum class Dir { Down, Up };
enum class CupOrient { PM, MP };   // PM: [+][-], MP: [-][+]
enum class AssocDir { Right, Left };

inline Letter dir_letter(Dir d) { return d == Dir::Down ? Letter::Plus : Letter::Minus; }
inline Dir letter_dir(Letter l) { return l == Letter::Plus ? Dir::Down : Dir::Up; }

// Identity on a single interval.
struct IdCell {
  PWord word;
  bool operator==(const IdCell&) const = default;
};

// Real crossing of two single strands. d1 is the direction of the strand
// running top-left to bottom-right, d2 of the one running top-right to
// bottom-left. sign is the knot-theoretic crossing sign (writhe
// contribution); which strand passes over is derived from sign and
// directions.
struct CrossingCell {
  Sign sign;
  Dir d1, d2;
  bool operator==(const CrossingCell&) const = default;
};

// True when the top-left/bottom-right strand is the over strand.
bool crossing_over_is_tlbr(const CrossingCell& c);

// Virtual crossing: swaps two whole intervals, [left][right] -> [right][left].
struct VirtualCell {
  PWord left, right;
  bool operator==(const VirtualCell&) const = default;
};

// Birth: empty -> [+][-] (PM) or [-][+] (MP).
struct CupCell {
  CupOrient orient;
  bool operator==(const CupCell&) const = default;
};

// Death: [+][-] (PM) or [-][+] (MP) -> empty.
struct CapCell {
  CupOrient orient;
  bool operator==(const CapCell&) const = default;
};

// [left right] -> [left][right]; the monoidal-structure map.
struct SplitCell {
  PWord left, right;
  bool operator==(const SplitCell&) const = default;
};

// [left][right] -> [left right]; its inverse.
struct MergeCell {
  PWord left, right;
  bool operator==(const MergeCell&) const = default;
};

struct UnitCell {  // empty -> [()]
  bool operator==(const UnitCell&) const = default;
};

struct CounitCell {  // [()] -> empty
  bool operator==(const CounitCell&) const = default;
};

// Right: [(w1 w2) w3] -> [w1 (w2 w3)]; Left: the inverse rebracketing.
struct AssocCell {
  AssocDir dir;
  PWord w1, w2, w3;
  bool operator==(const AssocCell&) const = default;
};

using Cell = std::variant<IdCell, CrossingCell, VirtualCell, CupCell, CapCell, SplitCell,
                          MergeCell, UnitCell, CounitCell, AssocCell>;

SeqObject cell_dom(const Cell& c);
SeqObject cell_cod(const Cell& c);
bool is_identity_cell(const Cell& c);
std::string cell_str(const Cell& c);  // the DSL token

// One horizontal layer: a total left-to-right decomposition into cells,
// identities stored explicitly per interval.
struct Slice {
  std::vector<Cell> cells;
  bool operator==(const Slice&) const = default;
};

SeqObject slice_dom(const Slice& s);
SeqObject slice_cod(const Slice& s);
std::vector<Cell> identity_cells(const SeqObject& o);

// Sliced morphism term, read top to bottom.
struct MorphismTerm {
  SeqObject dom, cod;
  std::vector<Slice> slices;

  static MorphismTerm identity(const SeqObject& o) { return {o, o, {}}; }

  bool operator==(const MorphismTerm&) const = default;

  // Boundary objects: index 0 is dom, index slices.size() is cod.
  std::vector<SeqObject> boundaries() const;
};

// Gluing along a matching boundary; throws BoundaryMismatch.
MorphismTerm compose(const MorphismTerm& f, const MorphismTerm& g);

// Juxtaposition, slices padded with identities so both run side by side.
MorphismTerm tensor(const MorphismTerm& f, const MorphismTerm& g);

// The symmetry a.b -> b.a built from virtual crossings, one per slice,
// following the hexagon decomposition.
MorphismTerm build_symmetry(const SeqObject& a, const SeqObject& b);

struct ValidationIssue {
  int slice_index;  // -1 for term-level issues
  std::string message;
};
using ValidationReport = std::vector<ValidationIssue>;

// Empty report iff all structural invariants hold: nonempty slices, chained
// interfaces, dom/cod endpoints.
ValidationReport validate(const MorphismTerm& t);
void require_valid(const MorphismTerm& t);  // throws ValidationError

// A term over one-letter intervals, reinterpreted over flat words.
struct StrictTerm {
  Word dom, cod;
  MorphismTerm term;
};

// Checks the term lives in the strict image (single-letter intervals, no
// bracket/unit/assoc cells) and produces the word-level view; the underlying
// slices and evaluation are unchanged. Throws NotStrictError.
StrictTerm strictify(const MorphismTerm& t);

// Signed real-crossing count; virtual crossings contribute 0.
int writhe(const MorphismTerm& t);

}  // namespace vtangle
