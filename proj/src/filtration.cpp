#include "g2kit/filtration.hpp"

#include "g2kit/endomorphisms.hpp"

namespace g2kit {

namespace {

const EndV& id8() {
  static const EndV i = EndV::Identity();
  return i;
}

void check_window(int r, int s) {
  if (!(1 <= r && r <= s && s <= 2 * r)) throw PreconditionError("need 1 ≤ r ≤ s ≤ 2r");
}

/// Position p ↦ index of e_{label(p)} in the splitting basis.
std::array<int, 8> standard_index(const LatticeSeq& s) {
  std::array<int, 8> idx{};
  idx.fill(-1);
  if (s.basis.size() != 8) throw DomainError("need a splitting basis of V");
  for (int b = 0; b < 8; ++b)
    for (int p = 0; p < 8; ++p)
      if (s.basis[b] == basis<Scalar>(label(p))) idx[p] = b;
  for (int v : idx)
    if (v < 0) throw DomainError("need a norm split by the standard basis");
  return idx;
}

std::vector<FiltrationGenerator> level_generators(const LatticeSeq& s, int k, const FieldContext* ctx, bool with_group) {
  auto idx = standard_index(s);
  FiltrationLattice fl = filtration_lattice(s, k);
  std::vector<FiltrationGenerator> out;
  for (const auto& g : lie_generators()) {
    std::int64_t e = fl.bounds(idx[g.row], idx[g.col]);
    Scalar lambda = ctx->monomial(1, e);
    FiltrationGenerator fg{&g, lambda, generator_lie_triple(g, lambda), {}};
    if (with_group) {
      std::optional<Scalar> root;
      if (g.family == GeneratorFamily::diagonal) root = principal_unit_sqrt(cayley_scalar(lambda));
      fg.group = generator_group_triple(g, lambda, root);
    }
    out.push_back(std::move(fg));
  }
  return out;
}

std::string gname(const FiltrationGenerator& g) { return g.gen->name + "(t^" + std::to_string(g.lambda.val()) + ")"; }

Scalar trace_of(const EndV& x) { return x.trace(); }

}  // namespace

EndV cayley(const EndV& x) {
  EndV h = x * Scalar::rational(1, 2);
  EndV den = id8() - h;
  return (id8() + h) * invert<Scalar>(den);
}

EndV cayley_inv(const EndV& g) { return (g - id8()) * invert<Scalar>(EndV(g + id8())) * Scalar(2); }

Scalar cayley_scalar(const Scalar& lambda) {
  Scalar h = lambda * Scalar::rational(1, 2);
  Scalar den = Scalar(1) - h;
  if (den.is_zero()) throw SingularityError("1 − λ/2 = 0");
  return (Scalar(1) + h) * den.inv();
}

bool moy_counterexample(const Scalar& u) {
  if (u.is_zero() || !u.has_context() || u.val() < 1) throw PreconditionError("need u ≠ 0 with v(u) ≥ 1");
  if (3 * u.val() >= u.context()->config().precision) throw PrecisionError("the gap has valuation 3v(u), beyond the precision");
  Scalar m2 = Scalar(-2) * u;
  Mat3 phi = Mat3::Zero();
  phi(0, 0) = u;
  phi(1, 1) = u;
  phi(2, 2) = m2;
  EndV x = lift_sl3(phi);
  if (!is_g2_lie(x)) throw std::logic_error("diag(u, u, −2u) must lift to 𝔤₂");
  Scalar c = cayley_scalar(u);
  bool scalar_gap = c * c * cayley_scalar(m2) != Scalar(1);
  return scalar_gap && !is_g2_element(cayley(x));
}

std::vector<FiltrationGenerator> filtration_triples(const LatticeSeq& s, int k, const FieldContext* ctx) {
  if (k < 1) throw PreconditionError("group triples need k ≥ 1");
  return level_generators(s, k, ctx, true);
}

CheckReport quotient_iso_check(const LatticeSeq& s, int r, int s_, const FieldContext* ctx) {
  check_window(r, s_);
  CheckReport rep;
  rep.check = "quotient_iso";
  rep.parameters = {{"r", std::to_string(r)}, {"s", std::to_string(s_)}, {"m", std::to_string(s.m)}};
  auto gens = filtration_triples(s, r, ctx);
  FiltrationLattice fr = filtration_lattice(s, r), fs = filtration_lattice(s, s_);
  rep.generators_tested = static_cast<int>(gens.size());

  std::vector<EndV> cx;
  for (const auto& g : gens) {
    const EndV& x = g.lie.t1;
    cx.push_back(cayley(x));
    if (!fs.contains(EndV(cx.back() - g.group.t1))) rep.violations.push_back("cayley of generator " + gname(g));
    auto lie_orb = orbit_triples(g.lie);
    auto grp_orb = orbit_triples(g.group);
    for (int k = 0; k < 6; ++k) {
      if (!fr.contains(lie_orb[k].t1)) rep.violations.push_back("𝔄_r not stable at " + gname(g));
      if (!fr.contains(EndV(grp_orb[k].t1 - id8()))) rep.violations.push_back("P^r not stable at " + gname(g));
      if (k > 0 && !fs.contains(EndV(cayley(lie_orb[k].t1) - grp_orb[k].t1)))
        rep.violations.push_back("C(dν X) ≢ ν(C X) at " + gname(g) + " ν#" + std::to_string(k));
    }
    // Fixed points of the quotient lift to fixed points of 𝔄_r.
    EndV orbit_sum = EndV::Zero();
    for (const auto& t : lie_orb) orbit_sum += t.t1;
    for (const EndV* z : std::array<const EndV*, 2>{&x, &orbit_sum}) {
      auto zo = orbit_triples(solve_lie(*z));
      bool fixed = true;
      EndV proj = EndV::Zero();
      for (const auto& t : zo) {
        if (!fs.contains(EndV(t.t1 - *z))) fixed = false;
        proj += t.t1;
      }
      if (!fixed) continue;
      proj *= Scalar::rational(1, 6);
      if (!fr.contains(proj) || !fs.contains(EndV(proj - *z)) || !is_g2_lie(proj))
        rep.violations.push_back("fixed point does not lift at " + gname(g));
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      EndV sum = gens[i].lie.t1 + gens[j].lie.t1;
      if (!fs.contains(EndV(cayley(sum) - cx[i] * cx[j])))
        rep.violations.push_back("C(X+Y) ≢ C(X)C(Y) at " + gname(gens[i]) + ", " + gname(gens[j]));
    }
  return rep;
}

std::uint32_t psi(const Scalar& y) {
  if (!y.has_context()) {
    if (y.is_zero()) return 0;
    throw UnsupportedError("ψ of a context-free constant depends on p");
  }
  if (!y.is_exact() && y.abs_prec() <= 0) throw PrecisionError("π⁰ coefficient beyond precision");
  if (y.is_zero() || y.val() > 0) return 0;
  const FieldContext* ctx = y.context();
  // Residue-field trace down to F_p.
  if (ctx->ext() == Extension::unramified) return static_cast<std::uint32_t>(2ull * y.coeff(0).a % ctx->p());
  return y.coeff(0).a;
}

std::uint32_t psi_b(const LatticeSeq& s, int r, int s_, const EndV& b, const EndV& x) {
  check_window(r, s_);
  if (!filtration_lattice(s, 1 - s_).contains(b)) throw LatticeMembershipError("b ∉ 𝔄_{1−s}");
  EndV xm = x - id8();
  if (!filtration_lattice(s, r).contains(xm)) throw LatticeMembershipError("x ∉ P^r");
  return psi(trace_of(b * xm));
}

CheckReport psi_check(const LatticeSeq& s, int r, int s_, const FieldContext* ctx) {
  check_window(r, s_);
  CheckReport rep;
  rep.check = "psi_b";
  rep.parameters = {{"r", std::to_string(r)}, {"s", std::to_string(s_)}, {"m", std::to_string(s.m)}};
  const auto p = static_cast<std::uint32_t>(ctx->p());
  auto xs = filtration_triples(s, r, ctx);
  auto bs = level_generators(s, 1 - s_, ctx, false);
  auto killers = level_generators(s, 1 - r, ctx, false);
  rep.generators_tested = static_cast<int>(xs.size() + bs.size());
  auto ch = [&](const EndV& b, const EndV& x) {
    Scalar tr(0);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if (b(i, j).is_zero()) continue;
        Scalar y = i == j ? Scalar(x(j, i) - Scalar(1)) : x(j, i);
        if (!y.is_zero()) tr = tr + b(i, j) * y;
      }
    return psi(tr);
  };

  std::vector<std::vector<std::uint32_t>> base(bs.size(), std::vector<std::uint32_t>(xs.size()));
  for (std::size_t k = 0; k < bs.size(); ++k)
    for (std::size_t i = 0; i < xs.size(); ++i) base[k][i] = ch(bs[k].lie.t1, xs[i].group.t1);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j) {
      EndV xy = xs[i].group.t1 * xs[j].group.t1;
      for (std::size_t k = 0; k < bs.size(); ++k)
        if (ch(bs[k].lie.t1, xy) != (base[k][i] + base[k][j]) % p)
          rep.violations.push_back("ψ_b not multiplicative: b=" + gname(bs[k]) + " x=" + gname(xs[i]) + " y=" + gname(xs[j]));
    }
  for (const auto& b : killers)
    for (const auto& x : xs)
      if (ch(b.lie.t1, x.group.t1) != 0) rep.violations.push_back("b ∈ 𝔄_{1−r} pairs non-trivially: " + gname(b));
  // Just outside 𝔄_{1−r}: each generator must pair non-trivially with some x.
  FiltrationLattice fb = filtration_lattice(s, 1 - s_);
  for (const auto& k : killers) {
    EndV b = k.lie.t1 * ctx->monomial(1, -1);
    if (!fb.contains(b)) continue;
    bool hit = false;
    for (const auto& x : xs) hit = hit || ch(b, x.group.t1) != 0;
    if (!hit) rep.violations.push_back("ψ_b trivial for b ∉ 𝔄_{1−r}: " + k.gen->name);
  }
  std::vector<std::vector<TrialityTriple>> xos;
  for (const auto& x : xs) xos.push_back(orbit_triples(x.group));
  for (std::size_t k = 0; k < bs.size(); ++k) {
    auto bo = orbit_triples(bs[k].lie);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (int g = 1; g < 6; ++g)
        if (ch(bo[g].t1, xos[i][g].t1) != base[k][i])
          rep.violations.push_back("ψ not equivariant: b=" + gname(bs[k]) + " x=" + gname(xs[i]) + " ν#" + std::to_string(g));
  }
  return rep;
}

bool trace_triality_invariance(const EndV& x, const EndV& y) {
  if (!is_so(x) || !is_so(y)) throw UnsupportedError("triality is implemented on so(V)");
  auto ox = orbit_triples(solve_lie(x)), oy = orbit_triples(solve_lie(y));
  Scalar base = trace_of(x * y);
  for (int k = 1; k < 6; ++k)
    if (trace_of(ox[k].t1 * oy[k].t1) != base) return false;
  return true;
}

}  // namespace g2kit
