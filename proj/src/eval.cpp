#include "vtangle/eval.hpp"

#include <variant>

namespace vtangle {

namespace {

constexpr std::size_t kMaxDim = std::size_t(1) << 24;

std::size_t pow_checked(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > kMaxDim) throw DomainError("object dimension exceeds engine limit");
  }
  return r;
}

// Sparse application of I_L (x) C (x) I_R to m (acting on rows).
RingMatrix apply_local(const RingMatrix& C, std::size_t L, std::size_t R,
                       const RingMatrix& m) {
  const std::size_t r = C.rows(), c = C.cols();
  if (m.rows() != L * c * R) throw DomainError("local operator shape mismatch");
  RingMatrix out(L * r * R, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const LaurentPoly& cij = C.at(i, j);
      if (cij.is_zero()) continue;
      for (std::size_t l = 0; l < L; ++l)
        for (std::size_t rr = 0; rr < R; ++rr) {
          std::size_t in_row = (l * c + j) * R + rr;
          std::size_t out_row = (l * r + i) * R + rr;
          for (std::size_t col = 0; col < m.cols(); ++col) {
            const LaurentPoly& v = m.at(in_row, col);
            if (v.is_zero()) continue;
            out.at(out_row, col) += cij * v;
          }
        }
    }
  return out;
}

RingMatrix flip_matrix(std::size_t p, std::size_t q) {
  RingMatrix m(q * p, p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) m.at(j * p + i, i * q + j) = LaurentPoly::one();
  return m;
}

// Brackets, associators and unit/counit are invisible to the strict target.
bool evaluates_to_identity(const Cell& c) {
  return std::holds_alternative<IdCell>(c) || std::holds_alternative<SplitCell>(c) ||
         std::holds_alternative<MergeCell>(c) || std::holds_alternative<UnitCell>(c) ||
         std::holds_alternative<CounitCell>(c) || std::holds_alternative<AssocCell>(c);
}

}  // namespace

const RingMatrix& EvalContext::generator_matrix(const Cell& c) {
  std::string key = cell_str(c);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(std::move(key), derive(c)).first->second;
}

RingMatrix EvalContext::derive(const Cell& c) {
  const std::size_t n = datum_.dim;
  const RingMatrix I_n = RingMatrix::identity(n);
  const RingMatrix I_n2 = RingMatrix::identity(n * n);

  if (const auto* x = std::get_if<CrossingCell>(&c)) {
    const RingMatrix& base = x->sign == Sign::Pos ? datum_.R_pos : datum_.R_neg;
    if (x->d1 == Dir::Down && x->d2 == Dir::Down) return base;
    if (x->d1 == Dir::Down && x->d2 == Dir::Up) {
      // Bend the right strand: cup on the left, cap on the right.
      return kron(I_n2, datum_.cap_pm) * kron(I_n, kron(base, I_n)) *
             kron(datum_.cup_mp, I_n2);
    }
    if (x->d1 == Dir::Up && x->d2 == Dir::Down) {
      return kron(datum_.cap_mp, I_n2) * kron(I_n, kron(base, I_n)) *
             kron(I_n2, datum_.cup_pm);
    }
    // Both strands upward: bend once more around the (Down, Up) variant.
    RingMatrix mid = generator_matrix(CrossingCell{x->sign, Dir::Down, Dir::Up});
    return kron(I_n2, datum_.cap_pm) * kron(I_n, kron(mid, I_n)) *
           kron(datum_.cup_mp, I_n2);
  }
  if (const auto* v = std::get_if<VirtualCell>(&c)) {
    return flip_matrix(pow_checked(n, v->left.letter_count()),
                       pow_checked(n, v->right.letter_count()));
  }
  if (const auto* cup = std::get_if<CupCell>(&c))
    return cup->orient == CupOrient::PM ? datum_.cup_pm : datum_.cup_mp;
  if (const auto* cap = std::get_if<CapCell>(&c))
    return cap->orient == CupOrient::PM ? datum_.cap_pm : datum_.cap_mp;
  // Identities, brackets, unit/counit, assoc: identity of the right size.
  std::size_t d = pow_checked(n, cell_dom(c).letter_count());
  return RingMatrix::identity(d);
}

std::size_t eval_object(const SeqObject& o, const EvalContext& ctx) {
  return pow_checked(ctx.datum().dim, o.letter_count());
}

RingMatrix eval_generator(const Cell& c, EvalContext& ctx) {
  return ctx.generator_matrix(c);
}

RingMatrix eval_term(const MorphismTerm& t, EvalContext& ctx) {
  require_valid(t);
  RingMatrix m = RingMatrix::identity(eval_object(t.dom, ctx));
  const std::size_t n = ctx.datum().dim;
  for (const Slice& s : t.slices) {
    // Cells act on disjoint letter blocks; apply each non-identity cell in
    // place. Blocks left of position k are already in codomain shape.
    std::vector<std::size_t> dom_dims(s.cells.size()), cod_dims(s.cells.size());
    for (std::size_t k = 0; k < s.cells.size(); ++k) {
      dom_dims[k] = pow_checked(n, cell_dom(s.cells[k]).letter_count());
      cod_dims[k] = pow_checked(n, cell_cod(s.cells[k]).letter_count());
    }
    std::size_t right_all = 1;
    for (std::size_t k = 0; k < s.cells.size(); ++k) right_all *= dom_dims[k];
    std::size_t left = 1;
    for (std::size_t k = 0; k < s.cells.size(); ++k) {
      right_all /= dom_dims[k];
      if (!evaluates_to_identity(s.cells[k])) {
        const RingMatrix& C = ctx.generator_matrix(s.cells[k]);
        m = apply_local(C, left, right_all, m);
      }
      left *= cod_dims[k];
    }
  }
  return m;
}

LaurentPoly invariant_closed(const MorphismTerm& t, EvalContext& ctx, bool normalize) {
  if (!t.dom.is_unit() || !t.cod.is_unit())
    throw NotClosedError("term has open boundary: " + t.dom.str() + " -> " + t.cod.str());
  RingMatrix m = eval_term(t, ctx);
  LaurentPoly value = m.at(0, 0);
  if (!normalize) return value;
  LaurentPoly theta = ctx.datum().twist_scalar();
  value = value * theta.pow(-writhe(t));
  LaurentPoly delta = ctx.datum().loop_value();
  try {
    return value.divexact(delta);
  } catch (const DomainError&) {
    throw DomainError(
        "normalization failed: value not divisible by the loop factor "
        "(strand-free diagram?)");
  }
}

RingMatrix long_invariant(const MorphismTerm& t, EvalContext& ctx) {
  if (t.dom != t.cod)
    throw BoundaryMismatch("long invariant requires equal boundaries: " + t.dom.str() +
                           " vs " + t.cod.str());
  return eval_term(t, ctx);
}

}  // namespace vtangle
