#include "g2kit/strata.hpp"

#include <algorithm>
#include <set>

namespace g2kit {

namespace {

MatX<Scalar> columns(const std::vector<Octonion>& vs) {
  MatX<Scalar> m(8, vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(k) = vs[k];
  return m;
}

MatX<Scalar> coords_of(const std::vector<Octonion>& basis, const EndV& x) {
  MatX<Scalar> b = columns(basis);
  auto y = solve<Scalar>(b, MatX<Scalar>(x * b));
  if (!y) throw DomainError("subspace is not stable under the endomorphism");
  return *y;
}

/// Projectors onto the kernels along the others; nullopt unless the kernels decompose V.
std::optional<std::vector<EndV>> projectors(const std::vector<SubspaceV>& kernels) {
  MatX<Scalar> k(8, 0);
  for (const auto& s : kernels) {
    MatX<Scalar> next(8, k.cols() + s.dim());
    next << k, s.basis();
    k = next;
  }
  if (k.cols() != 8 || rank<Scalar>(k) != 8) return std::nullopt;
  MatX<Scalar> kinv = invert<Scalar>(k);
  std::vector<EndV> out;
  int at = 0;
  for (const auto& s : kernels) {
    MatX<Scalar> e = MatX<Scalar>::Zero(8, 8);
    for (int j = at; j < at + s.dim(); ++j) e(j, j) = Scalar(1);
    out.push_back(EndV(k * e * kinv));
    at += s.dim();
  }
  return out;
}

std::vector<std::int64_t> block_valuations(const LatticeSeq& l, int r, const EndV& beta, const std::vector<EndV>& proj) {
  std::vector<std::int64_t> out;
  for (const auto& p : proj) {
    auto v = lattice_valuation(l, EndV(beta * p));
    out.push_back(v ? -*v : r);
  }
  return out;
}

/// Witness of a type-D lift: X, the factors of φ and their reflections, with kernels read off β.
StratumWitness lift_witness(const EndV& beta, const std::vector<Poly>& factors, const LatticeSeq& l, int r) {
  std::vector<Poly> polys = {Poly::x()};
  auto add = [&](const Poly& f) {
    Poly g = f.monic();
    for (const auto& h : polys)
      if (h == g) return;
    polys.push_back(g);
  };
  for (const auto& f : factors) add(f);
  for (const auto& f : factors) add(f.reflect());
  StratumWitness w;
  for (const auto& f : polys) {
    SubspaceV k(kernel<Scalar>(f.eval(MatX<Scalar>(beta))));
    if (k.dim() == 0) continue;
    w.decomposition.factors.push_back(f);
    w.decomposition.kernels.push_back(k);
  }
  if (auto proj = projectors(w.decomposition.kernels)) w.valuations = block_valuations(l, r, beta, *proj);
  else w.valuations.assign(w.decomposition.factors.size(), r);
  return w;
}

Clause clause(const std::string& name, bool ok, const std::string& detail = "") {
  return {name, ok ? ClauseStatus::pass : ClauseStatus::fail, detail};
}

const std::set<std::string>& witness_clauses() {
  static const std::set<std::string> s = {"witness_shape", "squarefree", "coprime", "annihilation", "decomposition", "block_valuations"};
  return s;
}

std::string vstr(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "∞"; }

}  // namespace

std::optional<std::int64_t> matrix_valuation(const MatX<Scalar>& y, const std::vector<Rational>& values, int m) {
  if (y.rows() != static_cast<int>(values.size()) || y.cols() != y.rows()) throw DomainError("matrix and splitting basis sizes differ");
  std::optional<std::int64_t> best;
  for (int r = 0; r < y.rows(); ++r)
    for (int c = 0; c < y.cols(); ++c) {
      if (y(r, c).is_zero()) continue;
      std::int64_t k = floor((Rational(y(r, c).val()) + values[r] - values[c]) * m);
      if (!best || k < *best) best = k;
    }
  return best;
}

std::optional<std::int64_t> lattice_valuation(const std::vector<Octonion>& basis, const std::vector<Rational>& values,
                                              int m, const EndV& x) {
  return matrix_valuation(coords_of(basis, x), values, m);
}

std::optional<std::int64_t> lattice_valuation(const LatticeSeq& s, const EndV& x) {
  return lattice_valuation(s.basis, s.values, s.m, x);
}

LatticeSeq lattice_seq_with_period(const NormFn& a, int m) {
  LatticeSeq s = lattice_seq_from_norm(a);
  if (m < 1 || m % s.m != 0) throw DomainError("period must be a multiple of " + std::to_string(s.m));
  if (m == s.m) return s;
  s.m = m;
  s.dual_invariant.reset();
  if (s.basis.size() == 8) {
    Lattice d0 = dual_lattice(lattice_at(s, 0));
    for (int d = -16 * m; d <= 16 * m; ++d) {
      if (!lattice_equal(d0, lattice_at(s, d))) continue;
      bool all = true;
      for (int i = 1; i < m && all; ++i) all = lattice_equal(dual_lattice(lattice_at(s, i)), lattice_at(s, d - i));
      if (all) s.dual_invariant = d;
      break;
    }
  }
  return s;
}

std::string to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "fail";
    case ClauseStatus::assumed: return "assumed-by-witness";
  }
  return "fail";
}

bool StratumReport::ok() const {
  return std::none_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.status == ClauseStatus::fail; });
}

ClauseStatus StratumReport::status(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return c.status;
  throw UnsupportedError("no clause " + name);
}

std::vector<std::string> StratumReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : clauses)
    if (c.status == ClauseStatus::fail) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  return out;
}

StratumReport validate(const Stratum& s) {
  StratumReport rep;
  auto& cl = rep.clauses;
  cl.push_back(clause("derivation", is_derivation(s.beta)));
  cl.push_back(clause("range", s.n >= 1 && 0 <= s.r && s.r <= s.n, "n=" + std::to_string(s.n) + " r=" + std::to_string(s.r)));
  NormFn a = norm_of(s.lattice);
  bool point = a.dim() == 8;
  try {
    point = point && is_self_dual(a) && is_algebra_norm(a);
  } catch (const Error&) {
    point = false;
  }
  cl.push_back(clause("building_point", point, "self-dual algebra norm"));
  auto v = lattice_valuation(s.lattice, s.beta);
  cl.push_back(clause("valuation", !v || *v >= -s.n, "v_Λ(β) = " + vstr(v) + ", −n = " + std::to_string(-s.n)));

  const auto& w = s.witness.decomposition;
  bool shape = !w.factors.empty() && w.factors.size() == w.kernels.size() &&
               s.witness.valuations.size() == w.factors.size();
  for (const auto& f : w.factors) shape = shape && f.degree() >= 1;
  cl.push_back(clause("witness_shape", shape, std::to_string(w.factors.size()) + " factors, " + std::to_string(w.kernels.size()) + " kernels"));
  if (!shape) {
    for (const char* n : {"squarefree", "coprime", "annihilation", "decomposition", "lattice_split", "block_valuations", "block_depth"})
      cl.push_back(clause(n, false, "witness malformed"));
  } else {
    bool sqf = true, cop = true, ann = true;
    std::string cop_detail;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
      const Poly& f = w.factors[i];
      sqf = sqf && Poly::gcd(f, f.derivative()).degree() == 0;
      for (std::size_t j = i + 1; j < w.factors.size(); ++j) {
        Poly g = Poly::gcd(f, w.factors[j]);
        if (g.degree() > 0) {
          cop = false;
          cop_detail = "gcd(Ψ" + std::to_string(i) + ", Ψ" + std::to_string(j) + ") = " + g.str();
        }
      }
      const MatX<Scalar>& kb = w.kernels[i].basis();
      ann = ann && mat_is_zero<Scalar>(MatX<Scalar>(f.eval(MatX<Scalar>(s.beta)) * kb));
      for (int c = 0; c < kb.cols(); ++c) ann = ann && w.kernels[i].contains(Octonion(s.beta * kb.col(c)));
    }
    cl.push_back(clause("squarefree", sqf));
    cl.push_back(clause("coprime", cop, cop_detail));
    cl.push_back(clause("annihilation", ann, "Ψᵢ(β) = 0 on a β-stable Vⁱ"));
    auto proj = projectors(w.kernels);
    cl.push_back(clause("decomposition", proj.has_value(), "V = ⊕ Vⁱ"));
    if (proj) {
      FiltrationLattice a0 = filtration_lattice(s.lattice, 0);
      bool split = std::all_of(proj->begin(), proj->end(), [&](const EndV& p) { return a0.contains(p); });
      cl.push_back(clause("lattice_split", split, "Λ(t) = ⊕ Λ(t) ∩ Vⁱ"));
      auto nv = block_valuations(s.lattice, s.r, s.beta, *proj);
      std::string d;
      for (std::size_t i = 0; i < nv.size(); ++i)
        d += (i ? " " : "") + std::to_string(nv[i]) + "/" + std::to_string(s.witness.valuations[i]);
      cl.push_back(clause("block_valuations", split && nv == s.witness.valuations, "computed/claimed nᵢ: " + d));
      bool depth = std::all_of(nv.begin(), nv.end(), [&](std::int64_t x) { return x >= s.r; });
      cl.push_back(clause("block_depth", depth, "nᵢ ≥ r"));
    } else {
      for (const char* n : {"lattice_split", "block_valuations", "block_depth"}) cl.push_back(clause(n, false, "no decomposition"));
    }
  }
  cl.push_back({"block_simplicity", ClauseStatus::assumed, "each [Λⁱ, nᵢ, r, βᵢ] simple or null"});
  cl.push_back({"non_equivalence", ClauseStatus::assumed, s.justification});
  return rep;
}

ClassifiedStratum classify(const Stratum& s) {
  StratumReport rep = validate(s);
  for (const auto& c : rep.clauses) {
    if (c.status != ClauseStatus::fail) continue;
    std::string msg = c.name + (c.detail.empty() ? "" : ": " + c.detail);
    if (witness_clauses().count(c.name)) throw InvalidWitnessError(msg);
    throw PreconditionError(msg);
  }
  ClassifiedStratum out;
  out.stratum = s;
  out.analysis = analyze_semisimple(s.beta, s.witness.decomposition);
  out.tag = out.analysis.tag;
  if (out.tag == SemisimpleCase::null) return out;

  const SemisimpleAnalysis& an = out.analysis;
  NormFn a = norm_of(s.lattice);
  RestrictedStratum rs;
  rs.m = s.lattice.m;
  rs.n = s.n;
  rs.r = s.r;
  SubspaceV space;
  switch (out.tag) {
    case SemisimpleCase::hyperbolic_plane:
      rs.space = "W+";
      space = an.pol->w_plus;
      break;
    case SemisimpleCase::quadratic_extension:
    case SemisimpleCase::dim4_hermitian:
      rs.space = "W";
      space = an.w;
      break;
    case SemisimpleCase::dim4_split_eigen:
      rs.space = "W_λ";
      space = an.w_lambda;
      break;
    case SemisimpleCase::null: break;
  }
  try {
    rs.norm = restriction(a, space);
  } catch (const DomainError&) {
    throw UnsupportedError("the splitting basis of Λ is not adapted to " + rs.space);
  }
  rs.beta = coords_of(rs.norm.basis, s.beta);
  rs.valuation = matrix_valuation(rs.beta, rs.norm.values, rs.m);
  if (an.v0.dim() == 4) out.notes.push_back("V⁰ = ker β has dimension 4");

  switch (out.tag) {
    case SemisimpleCase::hyperbolic_plane:
      if (det<Scalar>(rs.beta).is_zero()) throw std::logic_error("β_{W+} has a zero eigenvalue although dim V⁰ = 2");
      break;
    case SemisimpleCase::quadratic_extension: {
      const Octonion one = unit<Scalar>();
      SubspaceV f1 = SubspaceV::span({one});
      for (const auto& v : an.v0.basis)
        if (!f1.contains(v)) rs.c = v - one * (trace(v) * Scalar::rational(1, 2));
      const Octonion& c = *rs.c;
      std::vector<Octonion> fb;
      for (const auto& b : rs.norm.basis) {
        if (!fb.empty() && SubspaceV::span(fb).contains(b)) continue;
        rs.d_basis.push_back(b);
        fb.push_back(b);
        fb.push_back(mul(c, b));
        if (rs.d_basis.size() == 3) break;
      }
      if (rs.d_basis.size() != 3) throw std::logic_error("no F'-basis of W in the splitting basis");
      MatX<Scalar> fbm = columns(fb);
      MatD3 phi;
      for (int l = 0; l < 3; ++l) {
        auto x = solve<Scalar>(fbm, MatX<Scalar>(s.beta * rs.d_basis[l]));
        if (!x) throw std::logic_error("β_W is not F'-linear");
        for (int k = 0; k < 3; ++k) phi[k][l] = one * (*x)(2 * k, 0) + c * (*x)(2 * k + 1, 0);
      }
      rs.beta_d = phi;
      break;
    }
    case SemisimpleCase::dim4_split_eigen:
      rs.eigenvalue = an.lambda;
      break;
    case SemisimpleCase::dim4_hermitian:
      rs.minpoly = an.minpoly_w;
      break;
    case SemisimpleCase::null: break;
  }
  out.restricted = rs;
  return out;
}

Stratum lift_type_D(const Sl3Stratum& s, const CompositionSubalgebra& d) {
  if (!(s.beta.trace()).is_zero()) throw InvalidLiftError("β' must be traceless");
  if (s.norm.dim() != 3) throw DomainError("need a norm on W⁺");
  NormFn full = extend_sl3(s.norm, d);
  Polarization pol = split_polarization(d);
  Stratum out;
  out.lattice = lattice_seq_with_period(full, s.m);
  out.n = s.n;
  out.r = s.r;
  out.beta = lift_sl3(s.beta, pol, {s.norm.basis[0], s.norm.basis[1], s.norm.basis[2]});
  auto vw = matrix_valuation(MatX<Scalar>(s.beta), s.norm.values, s.m);
  if (vw && *vw < -s.n) throw PreconditionError("β' ∉ 𝔄_{−n}(Λ_{W⁺})");
  if (lattice_valuation(out.lattice, out.beta) != vw) throw std::logic_error("type-D lift changed the valuation");
  out.witness = lift_witness(out.beta, s.factors, out.lattice, s.r);
  out.witness.decomposition.e_plus = pol.e_plus;
  out.justification = "type-D lift of an 𝔰𝔩(W⁺) stratum; blocks of β' taken as non-coalescing";
  return out;
}

Stratum lift_type_D(const Su21Stratum& s) {
  NormFn full = extend_su21(s.norm);
  NormFn fw = rescale_to_f(s.norm);
  Stratum out;
  out.lattice = lattice_seq_with_period(full, s.m);
  out.n = s.n;
  out.r = s.r;
  out.beta = lift_su21(s.beta, s.norm.c, s.norm.basis);
  auto vw = lattice_valuation(fw.basis, fw.values, s.m, out.beta);
  if (vw && *vw < -s.n) throw PreconditionError("β' ∉ 𝔄_{−n}(Λ_W)");
  if (lattice_valuation(out.lattice, out.beta) != vw) throw std::logic_error("type-D lift changed the valuation");
  out.witness = lift_witness(out.beta, s.factors, out.lattice, s.r);
  out.justification = "type-D lift of an 𝔰𝔲(W) stratum; blocks of β' taken as non-coalescing";
  return out;
}

Mat3 trace_adjust(const Mat3& g) {
  const FieldContext* ctx = context_of(g);
  if (ctx && ctx->p() == 3) throw DomainError("trace adjustment divides by 3");
  Scalar third = g.trace() * Scalar::rational(1, 3);
  Mat3 out = g;
  for (int i = 0; i < 3; ++i) out(i, i) -= third;
  return out;
}

}  // namespace g2kit
