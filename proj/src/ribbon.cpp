#include "vtangle/ribbon.hpp"

#include <json.hpp>

namespace vtangle {

namespace {

const LaurentPoly kA = LaurentPoly::variable(1);
const LaurentPoly kAinv = LaurentPoly::variable(-1);

RingMatrix check_square(const RingMatrix& m) { return m; }

}  // namespace

LaurentPoly RibbonDatum::loop_value() const { return (cap_pm * cup_pm).at(0, 0); }

LaurentPoly RibbonDatum::twist_scalar() const {
  if (twist.rows() != dim || twist.cols() != dim)
    throw DomainError("twist has wrong shape");
  LaurentPoly c = twist.at(0, 0);
  if (twist != RingMatrix::identity(dim).scaled(c))
    throw DomainError("twist is not a scalar multiple of the identity");
  return c;
}

DatumReport validate_datum(const RibbonDatum& d) {
  DatumReport report;
  auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
    report.push_back({name, ok, detail});
  };

  const std::size_t n = d.dim;
  const std::size_t n2 = n * n;
  bool shapes_ok = n >= 1 && d.R_pos.rows() == n2 && d.R_pos.cols() == n2 &&
                   d.R_neg.rows() == n2 && d.R_neg.cols() == n2 &&
                   d.cup_pm.rows() == n2 && d.cup_pm.cols() == 1 &&
                   d.cup_mp.rows() == n2 && d.cup_mp.cols() == 1 &&
                   d.cap_pm.rows() == 1 && d.cap_pm.cols() == n2 &&
                   d.cap_mp.rows() == 1 && d.cap_mp.cols() == n2 &&
                   d.twist.rows() == n && d.twist.cols() == n &&
                   d.twist_inv.rows() == n && d.twist_inv.cols() == n;
  push("shapes", shapes_ok,
       shapes_ok ? "" : "matrix dimensions inconsistent with dim = " + std::to_string(n));
  if (!shapes_ok) return report;  // nothing else is meaningful

  const RingMatrix I_n = RingMatrix::identity(n);
  const RingMatrix I_n2 = RingMatrix::identity(n2);

  auto expect_eq = [&](const std::string& name, const RingMatrix& lhs,
                       const RingMatrix& rhs) {
    std::string diff = lhs.first_difference(rhs);
    push(name, diff.empty(), diff);
  };

  // Reidemeister II on parallel downward strands.
  expect_eq("r2_inverse", d.R_pos * d.R_neg, I_n2);
  expect_eq("r2_inverse_flipped", d.R_neg * d.R_pos, I_n2);

  // Yang-Baxter braid relation on three strands.
  RingMatrix RI = kron(d.R_pos, I_n);
  RingMatrix IR = kron(I_n, d.R_pos);
  expect_eq("yang_baxter", RI * IR * RI, IR * RI * IR);

  // Zigzag identities for both duality pairs.
  expect_eq("zigzag_plus_s", kron(d.cap_pm, I_n) * kron(I_n, d.cup_mp), I_n);
  expect_eq("zigzag_plus_z", kron(I_n, d.cap_mp) * kron(d.cup_pm, I_n), I_n);
  expect_eq("zigzag_minus_s", kron(d.cap_mp, I_n) * kron(I_n, d.cup_pm), I_n);
  expect_eq("zigzag_minus_z", kron(I_n, d.cap_pm) * kron(d.cup_mp, I_n), I_n);

  // Curl closures of R_pos give the twist, on either side.
  RingMatrix right_closure = kron(I_n, d.cap_pm) * kron(d.R_pos, I_n) * kron(I_n, d.cup_pm);
  expect_eq("curl_right", right_closure, d.twist);
  RingMatrix left_closure = kron(d.cap_mp, I_n) * kron(I_n, d.R_pos) * kron(d.cup_mp, I_n);
  expect_eq("curl_left", left_closure, d.twist);
  expect_eq("twist_inverse", check_square(d.twist * d.twist_inv), I_n);

  return report;
}

std::vector<DatumCheck> datum_failures(const DatumReport& report) {
  std::vector<DatumCheck> fails;
  for (const auto& c : report)
    if (!c.ok) fails.push_back(c);
  return fails;
}

const RibbonDatum& bracket_datum() {
  static const RibbonDatum d = [] {
    RibbonDatum b;
    b.dim = 2;
    const GaussianInt i1(0, 1), i1n(0, -1);
    // The duality vector (0, iA, -iA^-1, 0); all four cup/cap maps share it.
    std::vector<LaurentPoly> v = {LaurentPoly::zero(), LaurentPoly::monomial(1, i1),
                                  LaurentPoly::monomial(-1, i1n), LaurentPoly::zero()};
    b.cup_pm = RingMatrix(4, 1);
    b.cup_mp = RingMatrix(4, 1);
    b.cap_pm = RingMatrix(1, 4);
    b.cap_mp = RingMatrix(1, 4);
    for (std::size_t k = 0; k < 4; ++k) {
      b.cup_pm.at(k, 0) = v[k];
      b.cup_mp.at(k, 0) = v[k];
      b.cap_pm.at(0, k) = v[k];
      b.cap_mp.at(0, k) = v[k];
    }
    // R_pos = A*I + A^-1 * cup.cap, R_neg its inverse.
    RingMatrix K = b.cup_pm * b.cap_pm;
    b.R_pos = RingMatrix::identity(4).scaled(kA) + K.scaled(kAinv);
    b.R_neg = RingMatrix::identity(4).scaled(kAinv) + K.scaled(kA);
    // Curl closure value, fixed by the validation suite.
    b.twist = RingMatrix::identity(2).scaled(LaurentPoly::monomial(3, GaussianInt(-1)));
    b.twist_inv = RingMatrix::identity(2).scaled(LaurentPoly::monomial(-3, GaussianInt(-1)));
    return b;
  }();
  return d;
}

namespace {

using nlohmann::json;

json poly_to_json(const LaurentPoly& p) {
  json j = json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({e, {c.re, c.im}});
  return j;
}

LaurentPoly poly_from_json(const json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    int e = t.at(0).get<int>();
    GaussianInt c(t.at(1).at(0).get<std::int64_t>(), t.at(1).at(1).get<std::int64_t>());
    terms.push_back({e, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json matrix_to_json(const RingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RingMatrix matrix_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  RingMatrix m(rows, cols);
  const json& e = j.at("entries");
  if (e.size() != rows) throw DomainError("datum json: row count mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (e[i].size() != cols) throw DomainError("datum json: column count mismatch");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = poly_from_json(e[i][k]);
  }
  return m;
}

}  // namespace

std::string datum_to_json(const RibbonDatum& d) {
  json j = {{"dim", d.dim},
            {"R_pos", matrix_to_json(d.R_pos)},
            {"R_neg", matrix_to_json(d.R_neg)},
            {"cup_pm", matrix_to_json(d.cup_pm)},
            {"cup_mp", matrix_to_json(d.cup_mp)},
            {"cap_pm", matrix_to_json(d.cap_pm)},
            {"cap_mp", matrix_to_json(d.cap_mp)},
            {"twist", matrix_to_json(d.twist)},
            {"twist_inv", matrix_to_json(d.twist_inv)}};
  return j.dump(2);
}

RibbonDatum datum_from_json(const std::string& text) {
  json j = json::parse(text);
  RibbonDatum d;
  d.dim = j.at("dim").get<std::size_t>();
  d.R_pos = matrix_from_json(j.at("R_pos"));
  d.R_neg = matrix_from_json(j.at("R_neg"));
  d.cup_pm = matrix_from_json(j.at("cup_pm"));
  d.cup_mp = matrix_from_json(j.at("cup_mp"));
  d.cap_pm = matrix_from_json(j.at("cap_pm"));
  d.cap_mp = matrix_from_json(j.at("cap_mp"));
  d.twist = matrix_from_json(j.at("twist"));
  d.twist_inv = matrix_from_json(j.at("twist_inv"));
  return d;
}

}  // namespace vtangle
