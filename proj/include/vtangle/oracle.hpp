#pragma once

#include <cstddef>
#include <vector>

#include "vtangle/poly.hpp"
#include "vtangle/term.hpp"

namespace vtangle {

enum class Smoothing { A, B };

// Total smoothing choice, indexed by the term's real crossings in
// deterministic top-to-bottom, left-to-right order.
struct StateAssignment {
  std::vector<Smoothing> choice;
};

std::size_t real_crossing_count(const MorphismTerm& t);

// Number of closed curves after replacing each real crossing by its chosen
// smoothing; strands pass through virtual crossings transversally, so those
// never merge loops.
std::size_t loop_count(const MorphismTerm& t, const StateAssignment& s);

// Kauffman-style state sum over all 2^c smoothings of a closed term,
// computed by loop tracing instead of matrices. Each state contributes
// A^(a-b) times the product of its loop weights; a loop whose total turning
// is +-1 full turn weighs the loop value -A^2 - A^-2, and in general a loop
// of turning r weighs (-1)^r (A^{2r} + A^{-2r}) -- the value the flat curve
// forces once virtual crossings are kept as rigid symmetries (no virtual
// first Reidemeister move). Agrees with the evaluator's unnormalized closed
// invariant exactly.
// Requires: closed, valid, one-letter intervals, at most 20 crossings.
LaurentPoly bracket_oracle(const MorphismTerm& t);

}  // namespace vtangle
