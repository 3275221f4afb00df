#include "g2kit/serialize.hpp"

namespace g2kit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || (n && j.size() != n))
    throw ParseError(std::string(what) + " must be an array" + (n ? " of " + std::to_string(n) + " entries" : ""));
  return j;
}

std::vector<Octonion> vectors_from_json(const Json& j, const FieldContext* ctx) {
  std::vector<Octonion> out;
  for (const auto& v : array_of(j, 0, "basis")) out.push_back(octonion_from_json(v, ctx));
  return out;
}

}  // namespace

Json to_json(const FieldConfig& c) { return {{"p", c.p}, {"precision", c.precision}, {"extension", to_string(c.ext)}}; }

FieldConfig field_config_from_json(const Json& j) {
  FieldConfig c;
  try {
    c.p = field(j, "p").get<int>();
    c.precision = field(j, "precision").get<int>();
    c.ext = j.contains("extension") ? extension_from_string(j.at("extension").get<std::string>()) : Extension::none;
  } catch (const Json::exception& ex) {
    throw ParseError(ex.what());
  }
  c.validate();
  return c;
}

Json to_json(const Scalar& x) { return x.str(); }

Scalar scalar_from_json(const Json& j, const FieldContext* ctx) {
  if (!j.is_string()) throw ParseError("scalar must be a string");
  return ctx->parse(j.get<std::string>());
}

Json to_json(const Octonion& x) {
  Json a = Json::array();
  for (int k = 0; k < 8; ++k) a.push_back(to_json(x[k]));
  return a;
}

Octonion octonion_from_json(const Json& j, const FieldContext* ctx) {
  array_of(j, 8, "octonion");
  Octonion x;
  for (int k = 0; k < 8; ++k) x[k] = scalar_from_json(j[k], ctx);
  return x;
}

Json to_json(const EndV& x) {
  Json a = Json::array();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) a.push_back(to_json(x(r, c)));
  return a;
}

EndV end_from_json(const Json& j, const FieldContext* ctx) {
  array_of(j, 64, "endomorphism");
  EndV x;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) x(r, c) = scalar_from_json(j[8 * r + c], ctx);
  return x;
}

Json to_json(const TrialityTriple& t) {
  return {{"t1", to_json(t.t1)}, {"t2", to_json(t.t2)}, {"t3", to_json(t.t3)}, {"lie", t.lie}};
}

TrialityTriple triple_from_json(const Json& j, const FieldContext* ctx) {
  TrialityTriple t;
  t.t1 = end_from_json(field(j, "t1"), ctx);
  t.t2 = end_from_json(field(j, "t2"), ctx);
  t.t3 = end_from_json(field(j, "t3"), ctx);
  t.lie = field(j, "lie").get<bool>();
  return t;
}

Json to_json(const NormFn& a) {
  Json b = Json::array(), v = Json::array();
  for (const auto& x : a.basis) b.push_back(to_json(x));
  for (const auto& x : a.values) v.push_back(to_string(x));
  return {{"basis", b}, {"values", v}};
}

NormFn norm_from_json(const Json& j, const FieldContext* ctx) {
  NormFn a;
  a.basis = vectors_from_json(field(j, "basis"), ctx);
  const Json& vals = array_of(field(j, "values"), 0, "values");
  if (vals.size() != a.basis.size()) throw ParseError("norm has " + std::to_string(a.basis.size()) + " vectors and " + std::to_string(vals.size()) + " values");
  for (const auto& v : vals) {
    if (!v.is_string()) throw ParseError("norm values must be strings \"p/q\"");
    a.values.push_back(parse_rational(v.get<std::string>()));
  }
  return a;
}

Json to_json(const LatticeSeq& s) {
  Json j = to_json(NormFn{s.basis, s.values});
  j["m"] = s.m;
  j["dual_invariant"] = s.dual_invariant ? Json(*s.dual_invariant) : Json(nullptr);
  j["jump_table"] = s.jump_table();
  return j;
}

LatticeSeq lattice_seq_from_json(const Json& j, const FieldContext* ctx) {
  NormFn a = norm_from_json(j, ctx);
  int m = j.contains("m") ? j.at("m").get<int>() : 0;
  if (m == 0) return lattice_seq_from_norm(a);
  return lattice_seq_with_period(a, m);
}

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Poly poly_from_json(const Json& j, const FieldContext* ctx) {
  std::vector<Scalar> c;
  for (const auto& x : array_of(j, 0, "polynomial")) c.push_back(scalar_from_json(x, ctx));
  return Poly(c);
}

Json to_json(const Stratum& s) {
  Json factors = Json::array(), kernels = Json::array();
  for (const auto& f : s.witness.decomposition.factors) factors.push_back(to_json(f));
  for (const auto& k : s.witness.decomposition.kernels) {
    Json vs = Json::array();
    for (const auto& v : k.vectors()) vs.push_back(to_json(v));
    kernels.push_back(vs);
  }
  Json w = {{"factors", factors}, {"kernels", kernels}, {"valuations", s.witness.valuations}};
  if (s.witness.decomposition.e_plus) w["e_plus"] = to_json(*s.witness.decomposition.e_plus);
  if (s.witness.decomposition.sqrt_u) w["sqrt_u"] = to_json(*s.witness.decomposition.sqrt_u);
  return {{"lattice", to_json(s.lattice)}, {"n", s.n},          {"r", s.r},
          {"beta", to_json(s.beta)},       {"witness", w},      {"justification", s.justification}};
}

Stratum stratum_from_json(const Json& j, const FieldContext* ctx) {
  Stratum s;
  s.lattice = lattice_seq_from_json(field(j, "lattice"), ctx);
  s.n = field(j, "n").get<int>();
  s.r = field(j, "r").get<int>();
  s.beta = end_from_json(field(j, "beta"), ctx);
  const Json& w = field(j, "witness");
  for (const auto& f : array_of(field(w, "factors"), 0, "factors")) s.witness.decomposition.factors.push_back(poly_from_json(f, ctx));
  for (const auto& k : array_of(field(w, "kernels"), 0, "kernels"))
    s.witness.decomposition.kernels.push_back(SubspaceV::span(vectors_from_json(k, ctx)));
  if (w.contains("valuations")) s.witness.valuations = w.at("valuations").get<std::vector<std::int64_t>>();
  if (w.contains("e_plus")) s.witness.decomposition.e_plus = octonion_from_json(w.at("e_plus"), ctx);
  if (w.contains("sqrt_u")) s.witness.decomposition.sqrt_u = scalar_from_json(w.at("sqrt_u"), ctx);
  if (j.contains("justification")) s.justification = j.at("justification").get<std::string>();
  return s;
}

Json to_json(const CheckReport& r) {
  return {{"check", r.check}, {"parameters", r.parameters}, {"generators_tested", r.generators_tested}, {"violations", r.violations}};
}

CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  try {
    r.check = field(j, "check").get<std::string>();
    r.parameters = field(j, "parameters").get<std::map<std::string, std::string>>();
    r.generators_tested = field(j, "generators_tested").get<int>();
    r.violations = field(j, "violations").get<std::vector<std::string>>();
  } catch (const Json::exception& ex) {
    throw ParseError(ex.what());
  }
  return r;
}

Json to_json(const StratumReport& r) {
  Json a = Json::array();
  for (const auto& c : r.clauses) a.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"ok", r.ok()}, {"clauses", a}};
}

}  // namespace g2kit
