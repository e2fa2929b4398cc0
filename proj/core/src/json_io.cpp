#include "expmat/json_io.hpp"

namespace expmat {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(errc::bad_input, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json field_to_json(const FieldCtxPtr& ctx) {
  Json j;
  j["char"] = ctx->characteristic();
  if (ctx->is_finite()) {
    j["degree"] = ctx->ext_degree();
    if (ctx->ext_degree() > 1) j["modulus"] = ctx->modulus();
  }
  return j;
}

FieldCtxPtr parse_field(const Json& spec) {
  const Json& j = spec.is_object() && spec.contains("field") ? spec.at("field") : spec;
  std::size_t p = as_size(member(j, "char"), "char");
  if (p == 0) return FieldCtx::rationals();
  std::size_t m = j.contains("degree") ? as_size(j.at("degree"), "degree") : 1;
  std::vector<std::uint32_t> modulus;
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_array()) bad("modulus must be an array");
    for (const auto& c : j.at("modulus"))
      modulus.push_back(static_cast<std::uint32_t>(as_size(c, "modulus coefficient")));
  }
  try {
    return FieldCtx::finite(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m),
                            std::move(modulus));
  } catch (const error& e) {
    bad(std::string("bad field spec: ") + e.what());
  }
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar parse_scalar(const FieldCtxPtr& ctx, const Json& j) {
  if (j.is_string()) return Scalar::parse(ctx, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::of_int(ctx, j.get<long long>());
  bad("scalar must be a string or integer");
}

Json poly_to_json(const Poly& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(scalar_to_json(c));
  return arr;
}

Poly parse_poly(const FieldCtxPtr& ctx, const Json& j) {
  if (!j.is_array()) bad("polynomial must be a coefficient array");
  std::vector<Scalar> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(parse_scalar(ctx, c));
  return Poly::from_coeffs(ctx, std::move(coeffs));
}

Json ppoly_to_json(const PPoly& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(scalar_to_json(c));
  Json j;
  j["ppoly"] = std::move(arr);
  return j;
}

PPoly parse_ppoly(const FieldCtxPtr& ctx, const Json& j) {
  const Json& arr = j.is_object() ? member(j, "ppoly") : j;
  if (!arr.is_array()) bad("p-polynomial must be a coefficient array");
  std::vector<Scalar> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) coeffs.push_back(parse_scalar(ctx, c));
  return PPoly::from_coeffs(ctx, std::move(coeffs));
}

Json poly_matrix_to_json(const PolyMatrix& m) {
  Json j;
  j["field"] = field_to_json(m.ctx());
  j["n"] = m.n();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.n(); ++k) row.push_back(poly_to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

PolyMatrix parse_poly_matrix(const Json& j) {
  FieldCtxPtr ctx = parse_field(member(j, "field"));
  std::size_t n = as_size(member(j, "n"), "n");
  const Json& rows = member(j, "entries");
  if (!rows.is_array() || rows.size() != n) bad("entries must be an n x n array");
  std::vector<std::vector<Poly>> entries;
  entries.reserve(n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) bad("entries must be an n x n array");
    std::vector<Poly> out_row;
    out_row.reserve(n);
    for (const auto& e : row) out_row.push_back(parse_poly(ctx, e));
    entries.push_back(std::move(out_row));
  }
  return PolyMatrix::from_entries(ctx, std::move(entries));
}

Json scalar_matrix_entries(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.n(); ++k) row.push_back(scalar_to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ScalarMatrix parse_scalar_matrix_entries(const FieldCtxPtr& ctx, const Json& rows) {
  if (!rows.is_array() || rows.empty()) bad("matrix entries must be a nonempty array");
  std::size_t n = rows.size();
  std::vector<std::vector<Scalar>> entries;
  entries.reserve(n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) bad("matrix must be square");
    std::vector<Scalar> out_row;
    out_row.reserve(n);
    for (const auto& e : row) out_row.push_back(parse_scalar(ctx, e));
    entries.push_back(std::move(out_row));
  }
  return ScalarMatrix::from_rows(ctx, std::move(entries));
}

Json scalar_matrix_to_json(const ScalarMatrix& m) {
  Json j;
  j["field"] = field_to_json(m.ctx());
  j["n"] = m.n();
  j["entries"] = scalar_matrix_entries(m);
  return j;
}

ScalarMatrix parse_scalar_matrix(const Json& j) {
  FieldCtxPtr ctx = parse_field(member(j, "field"));
  return parse_scalar_matrix_entries(ctx, member(j, "entries"));
}

Json mpoly_to_json(const MPoly& f) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : f.terms()) {
    Json term = Json::array();
    term.push_back(mono);
    term.push_back(scalar_to_json(coeff));
    terms.push_back(std::move(term));
  }
  return terms;
}

MPoly parse_mpoly(const FieldCtxPtr& ctx, std::size_t nvars, const Json& j) {
  if (!j.is_array()) bad("multivariate polynomial must be a term list");
  MPoly f(ctx, nvars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) bad("term must be [exponents, coefficient]");
    Mono mono;
    for (const auto& e : term.at(0))
      mono.push_back(static_cast<std::uint32_t>(as_size(e, "exponent")));
    if (mono.size() != nvars) bad("exponent vector arity mismatch");
    f.add_term(std::move(mono), parse_scalar(ctx, term.at(1)));
  }
  return f;
}

Json derivation_to_json(const LinDerivation& d) {
  Json j;
  j["field"] = field_to_json(d.ctx());
  j["n"] = d.nvars();
  Json images = Json::array();
  for (const auto& img : d.images()) images.push_back(mpoly_to_json(img));
  j["images"] = std::move(images);
  return j;
}

LinDerivation parse_derivation(const Json& j) {
  FieldCtxPtr ctx = parse_field(member(j, "field"));
  std::size_t n = as_size(member(j, "n"), "n");
  const Json& images = member(j, "images");
  if (!images.is_array() || images.size() != n) bad("derivation needs n variable images");
  std::vector<MPoly> parsed;
  parsed.reserve(n);
  for (const auto& img : images) parsed.push_back(parse_mpoly(ctx, n, img));
  return LinDerivation(ctx, std::move(parsed));
}

Json projmap_to_json(const ProjMap& m) {
  Json j;
  j["n"] = m.n();
  j["degree"] = m.degree();
  Json comps = Json::array();
  for (const auto& c : m.components()) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : c.terms()) {
      Json term = Json::array();
      term.push_back(mono);
      term.push_back(poly_to_json(coeff));
      terms.push_back(std::move(term));
    }
    comps.push_back(std::move(terms));
  }
  j["components"] = std::move(comps);
  return j;
}

ProjMap parse_projmap(const FieldCtxPtr& ctx, const Json& j) {
  std::size_t n = as_size(member(j, "n"), "n");
  const Json& comps = member(j, "components");
  if (!comps.is_array() || comps.size() != n) bad("projective map needs n components");
  std::vector<TMPoly> components;
  components.reserve(n);
  for (const auto& terms : comps) {
    if (!terms.is_array()) bad("component must be a term list");
    TMPoly c(ctx, n);
    for (const auto& term : terms) {
      if (!term.is_array() || term.size() != 2) bad("term must be [exponents, coefficients]");
      Mono mono;
      for (const auto& e : term.at(0))
        mono.push_back(static_cast<std::uint32_t>(as_size(e, "exponent")));
      if (mono.size() != n) bad("exponent vector arity mismatch");
      c.add_term(std::move(mono), parse_poly(ctx, term.at(1)));
    }
    components.push_back(std::move(c));
  }
  return ProjMap::from_components(std::move(components));
}

Json witness_to_json(const FieldCtxPtr& ctx, const Witness& w) {
  Json j;
  j["schema"] = kWitnessSchema;
  j["field"] = field_to_json(ctx);
  Json steps = Json::array();
  for (const auto& step : w) {
    Json s;
    if (step.is_conjugation()) {
      s["kind"] = "conjugation";
      s["p"] = scalar_matrix_entries(std::get<ConjugationMove>(step.move).p);
    } else {
      const auto& bir = std::get<BirationalMove>(step.move);
      s["kind"] = "birational";
      s["sigma"] = projmap_to_json(bir.sigma);
      s["sigma_inverse"] = projmap_to_json(bir.sigma_inv);
      // The map is undefined where all components vanish simultaneously; the
      // locus is reported, not resolved.
      s["indeterminacy"] = "common zero locus of the sigma components";
    }
    s["from"] = poly_matrix_to_json(step.from.matrix());
    s["to"] = poly_matrix_to_json(step.to.matrix());
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

Witness parse_witness(const Json& j) {
  const Json& steps = member(j, "steps");
  if (!steps.is_array()) bad("steps must be an array");
  Witness out;
  for (const auto& s : steps) {
    PolyMatrix from = parse_poly_matrix(member(s, "from"));
    PolyMatrix to = parse_poly_matrix(member(s, "to"));
    auto [from_exp, from_rep] = ExpMatrix::verify(from);
    if (!from_exp) bad("witness step 'from' matrix is not exponential");
    auto [to_exp, to_rep] = ExpMatrix::verify(to);
    if (!to_exp) bad("witness step 'to' matrix is not exponential");
    std::string kind = member(s, "kind").get<std::string>();
    if (kind == "conjugation") {
      ScalarMatrix p = parse_scalar_matrix_entries(from.ctx(), member(s, "p"));
      out.push_back({ConjugationMove{std::move(p)}, *from_exp, *to_exp});
    } else if (kind == "birational") {
      ProjMap sigma = parse_projmap(from.ctx(), member(s, "sigma"));
      ProjMap sigma_inv = parse_projmap(from.ctx(), member(s, "sigma_inverse"));
      out.push_back({BirationalMove{std::move(sigma), std::move(sigma_inv)}, *from_exp, *to_exp});
    } else {
      bad("unknown step kind '" + kind + "'");
    }
  }
  return out;
}

Json birclass_to_json(const BirClass& c) {
  Json j;
  switch (c.kind()) {
    case BirClass::Kind::Identity:
      j["variant"] = "Identity";
      break;
    case BirClass::Kind::Char0Standard:
      j["variant"] = "Char0Standard";
      break;
    case BirClass::Kind::Line:
      j["variant"] = "Line";
      j["payload"] = ppoly_to_json(c.line_poly());
      break;
    case BirClass::Kind::Plane:
      j["variant"] = "Plane";
      j["payload"] = Json::array({ppoly_to_json(c.plane_pair().first),
                                  ppoly_to_json(c.plane_pair().second)});
      break;
  }
  return j;
}

}  // namespace expmat
