#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>

#include "vtangle/ribbon.hpp"
#include "vtangle/term.hpp"

namespace vtangle {

// Evaluation context: the target ribbon datum plus a memo from generator to
// matrix. Cached entries always equal freshly derived ones; the cache is a
// pure memo (duplicate computation is harmless).
class EvalContext {
 public:
  explicit EvalContext(const RibbonDatum& datum) : datum_(datum) {}
  const RibbonDatum& datum() const { return datum_; }
  const RingMatrix& generator_matrix(const Cell& c);

 private:
  RingMatrix derive(const Cell& c);
  const RibbonDatum& datum_;
  std::unordered_map<std::string, RingMatrix> cache_;
};

// Dimension of the evaluated object: dim(datum) per letter; brackets are
// invisible to the strict target.
std::size_t eval_object(const SeqObject& o, const EvalContext& ctx);

// Matrix of a single generator. Crossings on non-downward strands are
// derived from R_pos/R_neg by cup/cap dressing, not stored.
RingMatrix eval_generator(const Cell& c, EvalContext& ctx);

// Matrix of a term, shape dim(cod) x dim(dom); composition follows the
// column-vector convention (f then g evaluates to M(g) * M(f)).
RingMatrix eval_term(const MorphismTerm& t, EvalContext& ctx);

// The 1x1 entry of a closed term's matrix. With normalize, multiplies by
// twist^(-writhe) and divides by one loop factor, so the unknot maps to 1.
LaurentPoly invariant_closed(const MorphismTerm& t, EvalContext& ctx, bool normalize);

// Endomorphism-valued invariant of a long tangle; reported as a matrix,
// never coerced to a scalar.
RingMatrix long_invariant(const MorphismTerm& t, EvalContext& ctx);

}  // namespace vtangle
