#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vtangle/matrix.hpp"

namespace vtangle {

// Matrix realization of a ribbon object: R-matrices for the two crossing
// signs on a pair of downward strands, the four duality maps, and the twist.
// Shapes follow the evaluator's column-vector convention (rows = codomain):
//   R_pos, R_neg : n^2 x n^2
//   cup_pm, cup_mp : n^2 x 1   (births, empty -> two strands)
//   cap_pm, cap_mp : 1 x n^2   (deaths)
//   twist, twist_inv : n x n
struct RibbonDatum {
  std::size_t dim = 0;
  RingMatrix R_pos, R_neg;
  RingMatrix cup_pm, cup_mp;
  RingMatrix cap_pm, cap_mp;
  RingMatrix twist, twist_inv;

  // Scalar value of a free loop, cap_pm * cup_pm.
  LaurentPoly loop_value() const;

  // Twist must be a scalar multiple of the identity for closed-invariant
  // normalization; returns that scalar or throws DomainError.
  LaurentPoly twist_scalar() const;
};

struct DatumCheck {
  std::string name;
  bool ok;
  std::string detail;  // first differing entry when failed
};

using DatumReport = std::vector<DatumCheck>;

// Runs every RibbonDatum axiom at matrix level, exact arithmetic:
// shapes, R_pos*R_neg = I, Yang-Baxter, four zigzags, curl closures = twist,
// twist*twist_inv = I. Empty failure set iff all hold.
DatumReport validate_datum(const RibbonDatum& d);
std::vector<DatumCheck> datum_failures(const DatumReport& report);

// The n=2 Kauffman-bracket datum over Z[i][A, A^-1]. The free loop evaluates
// to -A^2 - A^-2 and the positive curl closure to -A^3 * I.
const RibbonDatum& bracket_datum();

// JSON (de)serialization; schema documented in the README.
std::string datum_to_json(const RibbonDatum& d);
RibbonDatum datum_from_json(const std::string& text);

}  // namespace vtangle
