#include "g2kit/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "g2kit/fixtures.hpp"

namespace g2kit {

namespace {

struct Probe {
  int samples = 0;
  std::optional<std::string> first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++samples;
    if (!ok && !first) first = "sample " + std::to_string(samples) + ": " + what();
  }
};

using CheckFn = std::function<void(const FieldContext*, std::mt19937_64&, Probe&)>;

struct CheckDef {
  std::string suite;
  std::string name;
  CheckFn fn;
};

Octonion e(int i) { return basis<Scalar>(i); }

std::string ostr(const Octonion& x) {
  std::string s = "[";
  for (int k = 0; k < 8; ++k) s += (k ? ", " : "") + x[k].str();
  return s + "]";
}

Scalar rnd(const FieldContext* ctx, std::mt19937_64& rng, std::int64_t vmin = -2, int terms = 3) {
  return ctx->random(rng, vmin, terms);
}

Scalar rnd_nonzero(const FieldContext* ctx, std::mt19937_64& rng, std::int64_t vmin = -1, int terms = 2) {
  for (;;) {
    Scalar x = ctx->random(rng, vmin, terms);
    if (!x.is_zero()) return x;
  }
}

Octonion rnd_oct(const FieldContext* ctx, std::mt19937_64& rng, int terms = 2) {
  Octonion x;
  for (int k = 0; k < 8; ++k) x[k] = rnd(ctx, rng, -2, terms);
  return x;
}

Octonion oinv(const Octonion& x) { return g2kit::conj(x) * norm_q(x).inv(); }

// ---------------------------------------------------------------- octonion

void sample_axioms(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr,
                   const std::function<bool(const Octonion&, const Octonion&, const Octonion&)>& law) {
  for (int s = 0; s < 500; ++s) {
    Octonion x = rnd_oct(ctx, rng), y = rnd_oct(ctx, rng), z = rnd_oct(ctx, rng);
    pr.expect(law(x, y, z), [&] { return "x=" + ostr(x) + " y=" + ostr(y) + " z=" + ostr(z); });
  }
}

const std::vector<std::array<Octonion, 2>> doubling_chains(const FieldContext* ctx) {
  Scalar t = ctx->uniformizer(), nu = ctx->nonsquare_unit();
  return {{e(-4) - e(4), e(1) + e(-1)}, {e(1) - e(-1) * nu, e(2) - e(-2) * t}, {e(1) - e(-1) * t, e(2) - e(-2) * nu}};
}

/// An anisotropic vector of D^⊥.
Octonion anisotropic_complement(const CompositionSubalgebra& d) {
  auto w = d.space().orthogonal().vectors();
  for (const auto& v : w)
    if (!norm_q(v).is_zero()) return v;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!norm_q(Octonion(w[i] + w[j])).is_zero()) return w[i] + w[j];
  throw DegeneracyError("no anisotropic vector orthogonal to D");
}

void check_doubling(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  int chain = 0;
  for (const auto& ch : doubling_chains(ctx)) {
    ++chain;
    CompositionSubalgebra d = center_algebra();
    for (int level = 0; level < 3; ++level) {
      Octonion a = level < 2 ? ch[level] : anisotropic_complement(d);
      CompositionSubalgebra dd = double_algebra(d, a);
      Scalar qa = norm_q(a);
      std::vector<std::pair<Octonion, Octonion>> halves;
      for (const auto& b : d.basis) halves.push_back({b, Octonion::Zero()});
      for (const auto& b : d.basis) halves.push_back({Octonion::Zero(), b});
      for (const auto& [x, y] : halves) {
        pr.expect(dd.space().contains(Octonion(x + mul(y, a))), [&] { return "chain " + std::to_string(chain) + " basis vector outside D ⊥ Da"; });
        for (const auto& [u, v] : halves) {
          Octonion lhs = mul(Octonion(x + mul(y, a)), Octonion(u + mul(v, a)));
          Octonion rhs = mul(x, u) - mul(g2kit::conj(v), y) * qa + mul(Octonion(mul(v, x) + mul(y, g2kit::conj(u))), a);
          pr.expect(lhs == rhs, [&] {
            return "chain " + std::to_string(chain) + " level " + std::to_string(level + 1) + " x=" + ostr(x) + " y=" + ostr(y) +
                   " u=" + ostr(u) + " v=" + ostr(v);
          });
        }
      }
      d = dd;
    }
  }
}

/// exp(X) for nilpotent X, an automorphism when X is a derivation.
std::optional<EndV> exp_nilpotent(const EndV& x, const FieldContext* ctx) {
  EndV sum = EndV::Identity(), term = EndV::Identity();
  for (int k = 1; k <= 8; ++k) {
    term = EndV(term * x) * ctx->from_rational(1, k);
    if (term == EndV::Zero()) return sum;
    sum += term;
  }
  return std::nullopt;
}

/// (g e₁, g e₋₁) for a random product g of exponentials of nilpotent 𝔤₂ generators.
std::pair<Octonion, Octonion> random_isotropic_pair(const FieldContext* ctx, std::mt19937_64& rng) {
  static const std::vector<EndV> gens = g2_generators();
  std::vector<const EndV*> nil;
  for (const auto& x : gens) {
    EndV c = EndV(x * x) * x;
    if (c == EndV::Zero()) nil.push_back(&x);
  }
  EndV g = EndV::Identity();
  for (int k = 0; k < 3; ++k) {
    const EndV& x = *nil[rng() % nil.size()];
    Scalar l = ctx->monomial(1 + static_cast<std::int64_t>(rng() % (ctx->p() - 1)), k == 0 ? static_cast<std::int64_t>(rng() % 3) - 1 : 0);
    g = EndV(g * *exp_nilpotent(EndV(x * l), ctx));
  }
  return {g * e(1), g * e(-1)};
}

void check_idempotents(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  const Octonion one = unit<Scalar>();
  for (int s = 0; s < 100; ++s) {
    auto [h, hp] = random_isotropic_pair(ctx, rng);
    auto what = [&, h = h, hp = hp](const char* id) { return [=] { return std::string(id) + " h=" + ostr(h) + " h'=" + ostr(hp); }; };
    Octonion hm = h - hp, hpl = h + hp;
    Octonion ep = -mul(h, hp), em = -mul(hp, h), c = mul(hpl, hm);
    pr.expect(norm_q(hm) == Scalar(-1) && norm_q(hpl) == Scalar(1), what("norms of h ± h'"));
    pr.expect(c == mul(hpl, oinv(hm)), what("(h+h')(h−h') = (h+h')(h−h')⁻¹"));
    pr.expect(c == mul(hp, h) - mul(h, hp), what("(h+h')(h−h') = h'h − hh'"));
    pr.expect(ep + em == one, what("−h'h − hh' = 1"));
    pr.expect(mul(em, em) == em && mul(ep, ep) == ep, what("idempotency"));
    pr.expect(mul(c, h) == h && mul(c, hp) == -hp, what("c·h = h, c·h' = −h'"));
    Scalar l = rnd_nonzero(ctx, rng);
    Idempotents id = idempotents_from_isotropic_pair(h * l, hp * l.inv());
    pr.expect(id.e_plus == ep && id.e_minus == em && id.c == c, what("generator independence"));
    bool sub = is_composition({one, c}) && is_composition({one, c, h, hp}) && bilinear_f(c, h).is_zero() && bilinear_f(c, hp).is_zero();
    pr.expect(sub, what("F[c] and F[c] + L + L' are composition subalgebras"));
  }
}

// ---------------------------------------------------------------- triality

void expect_triple(Probe& pr, const TrialityTriple& t, const std::string& name) {
  pr.expect(check_related(t), [&] { return name; });
}

void expect_orbit(Probe& pr, const TrialityTriple& t, const std::string& name) {
  int k = 0;
  for (const auto& o : orbit_triples(t)) {
    pr.expect(check_related(o), [&] { return name + " orbit element " + std::to_string(k); });
    ++k;
  }
}

void check_root_triples(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  for (bool lie : {false, true})
    for (int i = 1; i <= 3; ++i)
      for (int p = 0; p < 2; ++p) {
        Scalar l = rnd_nonzero(ctx, rng);
        auto tr = root_triple(i, p, l, lie);
        std::string name = std::string(lie ? "lie" : "group") + " root triple i=" + std::to_string(i) + " pattern=" + std::to_string(p) + " λ=" + l.str();
        expect_triple(pr, tr, name);
        expect_orbit(pr, tr, name);
      }
  for (bool lie : {false, true})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j) expect_triple(pr, fixed_root_triple(i, -j, rnd_nonzero(ctx, rng), lie), "fixed root triple");
}

void check_diagonal_triples(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  for (int i = 1; i <= 4; ++i) {
    Scalar s = rnd_nonzero(ctx, rng);
    auto tr = diag_lie_triple(i, s);
    expect_triple(pr, tr, "diagonal triple i=" + std::to_string(i) + " s=" + s.str());
    expect_orbit(pr, tr, "diagonal triple i=" + std::to_string(i));
  }
}

void check_glw(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  for (int s = 0; s < 4; ++s) {
    Mat3 g;
    Scalar det;
    do {
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) g(r, c) = rnd(ctx, rng, -1, 2);
      det = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
            g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
    } while (det.is_zero());
    Scalar l = rnd_nonzero(ctx, rng);
    Scalar u = l * l / det;
    auto tr = solve_glw(u, g, l);
    expect_triple(pr, tr, "GL(W) triple u=" + u.str() + " λ=" + l.str());
    expect_orbit(pr, tr, "GL(W) triple");
  }
}

void check_dim4(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  const Octonion one = unit<Scalar>();
  for (const auto& v0 : {split_quaternion_fixture(), division_quaternion_fixture(ctx)}) {
    Octonion a = anisotropic_complement(v0);
    std::vector<Octonion> iso;
    for (const auto& b : v0.basis)
      if (norm_q(b).is_zero() && trace(b).is_zero()) iso.push_back(b);
    for (int s = 0; s < 2; ++s) {
      Dim4Data d;
      d.v0 = v0;
      d.a = a;
      auto unit_norm = [&] {
        for (;;) {
          Octonion z = one * rnd(ctx, rng, 0, 2);
          for (const auto& b : v0.basis) z += b * rnd(ctx, rng, 0, 2);
          Scalar q = norm_q(z);
          if (!q.is_zero()) return Octonion(mul(z, z) * q.inv());
        }
      };
      d.alpha = unit_norm();
      d.delta = unit_norm();
      d.v = unit_norm();
      Scalar xi = rnd_nonzero(ctx, rng);
      Octonion w = one * xi;
      if (!iso.empty()) w += iso[0] * rnd(ctx, rng);
      else w = mul(unit_norm(), Octonion(one * xi));
      d.u = mul(d.v, w);
      auto tr = solve_dim4(d, xi);
      std::string name = "dim-4 triple over " + to_string(v0.kind);
      expect_triple(pr, tr, name);
      expect_orbit(pr, tr, name);
    }
  }
}

void check_dim2(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  const Octonion one = unit<Scalar>();
  Scalar nu = ctx->nonsquare_unit();
  Octonion c = e(1) - e(-1) * nu;
  std::array<Octonion, 3> w = {e(2), (e(-4) - e(4)) * Scalar(2), e(-2) * Scalar(2)};
  auto rnd_d = [&] {
    for (;;) {
      Octonion z = one * rnd(ctx, rng, 0, 2) + c * rnd(ctx, rng, 0, 2);
      if (!norm_q(z).is_zero()) return z;
    }
  };
  for (int s = 0; s < 4; ++s) {
    Octonion z = rnd_d(), y0 = rnd_d(), x0 = rnd_d();
    Octonion y = mul(y0, y0) * norm_q(y0).inv();
    Octonion xi = mul(x0, x0) * norm_q(x0).inv();
    MatD3 g;
    for (auto& r : g)
      for (auto& q : r) q = Octonion::Zero();
    g[0][0] = z;
    g[1][1] = y;
    g[2][2] = oinv(g2kit::conj(z));
    Octonion lam = mul(mul(xi, xi), oinv(g2kit::conj(det_d(g))));
    auto tr = solve_dim2(Dim2Data{c, w, lam, g}, xi);
    expect_triple(pr, tr, "dim-2 triple z=" + ostr(z));
    expect_orbit(pr, tr, "dim-2 triple");
  }
}

void check_generator_family(const FieldContext*, std::mt19937_64&, Probe& pr) {
  for (const auto& g : lie_generators()) {
    pr.expect(check_related(g.triple), [&] { return "generator " + g.name; });
    pr.expect(is_so(g.x), [&] { return "generator " + g.name + " not in so(V)"; });
  }
}

void check_derivation_fixed_point(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  auto g2 = g2_generators();
  const auto& so = lie_generators();
  for (int s = 0; s < 400; ++s) {
    EndV x = EndV::Zero();
    if (s < 200) {
      for (const auto& y : g2) x += y * rnd(ctx, rng, 0, 2);
    } else {
      for (const auto& g : so) x += g.x * rnd(ctx, rng, 0, 2);
    }
    TrialityTriple tr = solve_lie(x);
    bool diag = tr.t1 == x && tr.t2 == x && tr.t3 == x;
    bool der = is_derivation(x);
    pr.expect(der == diag && (s >= 200 || der), [&] {
      return std::string(s < 200 ? "g2 span" : "so(V) span") + " derivation=" + (der ? "1" : "0") + " diagonal=" + (diag ? "1" : "0");
    });
  }
}

// ---------------------------------------------------------------- norms

void check_norm_fixtures(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& nf : norm_fixtures(ctx)) {
    pr.expect(is_algebra_norm(nf.full), [&] { return nf.name + " not an algebra norm"; });
    pr.expect(is_self_dual(nf.full), [&] { return nf.name + " not self-dual"; });
    pr.expect(norm_equal(restriction(nf.full, nf.part.space()), nf.part), [&] { return nf.name + " restriction differs from the input"; });
    pr.expect(!(is_algebra_norm(nf.perturbed) && is_self_dual(nf.perturbed)), [&] { return nf.name + " perturbation accepted"; });
  }
}

void check_standard_norm(const FieldContext*, std::mt19937_64&, Probe& pr) {
  NormFn st = standard_norm({});
  pr.expect(is_self_dual(st) && is_algebra_norm(st), [] { return std::string("standard norm"); });
  pr.expect(triality_exponent_identities(st), [] { return std::string("standard norm exponent identities"); });
  auto pol = split_polarization(standard_hyperbolic_plane());
  NormFn ap{{e(1), e(2), e(3)}, {Rational(0), Rational(0), Rational(0)}};
  pr.expect(norm_equal(extend_sl3(ap, standard_hyperbolic_plane()), st), [] { return std::string("extension of the zero norm on W⁺"); });
  NormFn bad{{e(1), e(2), e(3)}, {Rational(1), Rational(0), Rational(0)}};
  bool thrown = false;
  try {
    extend_sl3(bad, standard_hyperbolic_plane());
  } catch (const VolumeError&) {
    thrown = true;
  }
  pr.expect(thrown, [] { return std::string("non-zero volume accepted"); });
  (void)pol;
}

void check_minorant(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  for (const auto& nf : norm_fixtures(ctx)) {
    for (int s = 0; s < 20; ++s) {
      Octonion x = rnd_oct(ctx, rng), y = rnd_oct(ctx, rng);
      pr.expect(minorant_pair(nf.full, x, y), [&] { return nf.name + " x=" + ostr(x) + " y=" + ostr(y); });
    }
  }
}

void check_lattice_duality(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& nf : norm_fixtures(ctx)) {
    LatticeSeq s = lattice_seq_from_norm(nf.full);
    pr.expect(s.dual_invariant == 1, [&] { return nf.name + " dual invariant ≠ 1"; });
    for (int i = -s.m; i <= s.m; ++i)
      pr.expect(lattice_equal(dual_lattice(lattice_at(s, i)), lattice_at(s, 1 - i)), [&] { return nf.name + " Λ(" + std::to_string(i) + ")* ≠ Λ(1 − i)"; });
    pr.expect(triality_exponent_identities(nf.full), [&] { return nf.name + " exponent identities"; });
  }
}

// ---------------------------------------------------------------- filtration

std::vector<std::pair<std::string, LatticeSeq>> filtration_lattices() {
  NormFn a3{{e(1), e(2), e(3)}, {Rational(1, 3), Rational(1, 3), Rational(-2, 3)}};
  return {{"m=1", lattice_seq_from_norm(standard_norm({}))}, {"m=3", lattice_seq_from_norm(extend_sl3(a3, standard_hyperbolic_plane()))}};
}

const std::array<std::pair<int, int>, 4> kWindows = {{{1, 1}, {1, 2}, {2, 3}, {2, 4}}};

void absorb(Probe& pr, const CheckReport& r, const std::string& where) {
  pr.samples += r.generators_tested;
  if (!r.ok() && !pr.first) pr.first = where + ": " + r.violations.front();
}

void check_generator_stability(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& [name, s] : filtration_lattices()) {
    NormFn a{s.basis, s.values};
    pr.expect(triality_exponent_identities(a), [&, name = name] { return name + " exponent identities"; });
    for (int k = 1; k <= 4; ++k) {
      auto fl = filtration_lattice(s, k);
      for (const auto& g : filtration_triples(s, k, ctx)) {
        bool ok = fl.contains(g.lie.t1) && fl.contains(g.lie.t2) && fl.contains(g.lie.t3);
        pr.expect(ok, [&, name = name] { return name + " k=" + std::to_string(k) + " generator " + g.gen->name; });
      }
    }
  }
}

void check_cayley_basics(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  pr.expect(cayley(EndV::Zero()) == EndV::Identity(), [] { return std::string("C(0) ≠ 1"); });
  for (const auto& g : lie_generators()) {
    Scalar l = rnd(ctx, rng, 1, 2);
    EndV x = g.x * l;
    pr.expect(cayley_inv(cayley(x)) == x, [&] { return "C⁻¹∘C on " + g.name; });
    pr.expect(is_isometry(cayley(x)), [&] { return "C(" + g.name + ") not an isometry"; });
  }
}

void check_cayley_congruence(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& [name, s] : filtration_lattices())
    for (auto [r, s_] : kWindows)
      absorb(pr, quotient_iso_check(s, r, s_, ctx), name + " (r,s)=(" + std::to_string(r) + "," + std::to_string(s_) + ")");
}

void check_psi(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& [name, s] : filtration_lattices())
    for (auto [r, s_] : kWindows)
      absorb(pr, psi_check(s, r, s_, ctx), name + " (r,s)=(" + std::to_string(r) + "," + std::to_string(s_) + ")");
}

void check_trace_invariance(const FieldContext* ctx, std::mt19937_64& rng, Probe& pr) {
  const auto& so = lie_generators();
  for (int s = 0; s < 10; ++s) {
    EndV x = EndV::Zero(), y = EndV::Zero();
    for (const auto& g : so) {
      x += g.x * rnd(ctx, rng, 0, 2);
      y += g.x * rnd(ctx, rng, 0, 2);
    }
    pr.expect(trace_triality_invariance(x, y), [] { return std::string("tr(XY) changed under triality"); });
  }
}

void check_moy(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  Scalar t = ctx->t();
  for (const Scalar& u : {t, Scalar(t * t), Scalar(t * Scalar(3))}) pr.expect(moy_counterexample(u), [&] { return "u=" + u.str(); });
}

SymplecticSpace symplectic_dim4_f5() {
  return {5, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
}

SymplecticSpace symplectic_dim6_f7() {
  std::vector<std::vector<std::int64_t>> j(6, std::vector<std::int64_t>(6, 0)), g = j;
  for (int i = 0; i < 3; ++i) {
    j[i][i + 3] = 1;
    j[i + 3][i] = -1;
    g[(i + 1) % 3][i] = 1;
    g[3 + (i + 1) % 3][3 + i] = 1;
  }
  return {7, j, g};
}

void check_gamma_perp_exhaustive(const FieldContext*, std::mt19937_64&, Probe& pr) {
  SymplecticSpace v = symplectic_dim4_f5();
  for (const auto& x : gamma_stable_subspaces(v)) {
    auto r = gamma_perp(v, x);
    pr.expect(r.identity && r.decomposition, [&] { return "dim X = " + std::to_string(x.size()); });
  }
}

void check_gamma_perp_random(const FieldContext*, std::mt19937_64& rng, Probe& pr) {
  SymplecticSpace v = symplectic_dim6_f7();
  for (int s = 0; s < 50; ++s) {
    std::vector<std::vector<std::int64_t>> x;
    int gens = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < gens; ++k) {
      std::vector<std::int64_t> w(6);
      for (auto& c : w) c = static_cast<std::int64_t>(rng() % 7);
      for (int o = 0; o < 3; ++o) {
        x.push_back(w);
        std::vector<std::int64_t> gw(6, 0);
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) gw[i] += v.gamma[i][j] * w[j];
        w = gw;
      }
    }
    auto r = gamma_perp(v, x);
    pr.expect(r.identity && r.decomposition, [&] { return std::to_string(gens) + " generators"; });
  }
}

// ---------------------------------------------------------------- strata

void check_strata_validate(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& f : strata_corpus(ctx)) {
    auto rep = validate(f.stratum);
    pr.expect(rep.ok(), [&] {
      std::string s = f.name + " fails";
      for (const auto& c : rep.failures()) s += " " + c;
      return s;
    });
  }
}

void check_strata_classify(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& f : strata_corpus(ctx)) {
    auto c = classify(f.stratum);
    pr.expect(c.tag == f.expected, [&] { return f.name + " classified as " + to_string(c.tag) + ", expected " + to_string(f.expected); });
  }
}

void check_strata_round_trip(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& f : strata_corpus(ctx)) {
    if (!f.sl3 && !f.su21) continue;
    auto c = classify(f.stratum);
    if (c.tag != SemisimpleCase::hyperbolic_plane && c.tag != SemisimpleCase::quadratic_extension) continue;
    pr.expect(c.restricted.has_value(), [&] { return f.name + " has no restricted stratum"; });
    if (!c.restricted) continue;
    const RestrictedStratum& rs = *c.restricted;
    if (f.sl3 && c.tag == SemisimpleCase::hyperbolic_plane) {
      pr.expect(norm_equal(rs.norm, f.sl3->norm), [&] { return f.name + " restricted norm differs"; });
      pr.expect(mat_equal<Scalar>(rs.beta, MatX<Scalar>(f.sl3->beta)), [&] { return f.name + " restricted β differs"; });
      Sl3Stratum again = *f.sl3;
      again.norm = rs.norm;
      again.beta = Mat3(rs.beta);
      pr.expect(mat_equal<Scalar>(MatX<Scalar>(lift_type_D(again, *f.d).beta), MatX<Scalar>(f.stratum.beta)), [&] { return f.name + " re-lift differs"; });
    }
    if (f.su21 && c.tag == SemisimpleCase::quadratic_extension) {
      pr.expect(norm_equal(rs.norm, rescale_to_f(f.su21->norm)), [&] { return f.name + " restricted norm differs"; });
      bool eq = rs.beta_d.has_value();
      for (int i = 0; eq && i < 3; ++i)
        for (int j = 0; j < 3; ++j) eq = eq && (*rs.beta_d)[i][j] == f.su21->beta[i][j];
      pr.expect(eq, [&] { return f.name + " restricted β over D differs"; });
    }
  }
}

void check_strata_corruptions(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& c : corrupted_strata(ctx)) {
    auto rep = validate(c.stratum);
    pr.expect(rep.status(c.clause) == ClauseStatus::fail, [&] { return c.name + " passed clause " + c.clause; });
  }
}

void check_strata_serialization(const FieldContext* ctx, std::mt19937_64&, Probe& pr) {
  for (const auto& f : strata_corpus(ctx)) {
    Json j = to_json(f.stratum);
    Stratum back = stratum_from_json(Json::parse(j.dump()), ctx);
    bool same = back.beta == f.stratum.beta && back.n == f.stratum.n && back.r == f.stratum.r &&
                back.lattice.values == f.stratum.lattice.values && back.lattice.m == f.stratum.lattice.m &&
                back.witness.valuations == f.stratum.witness.valuations;
    for (std::size_t k = 0; same && k < back.lattice.basis.size(); ++k) same = back.lattice.basis[k] == f.stratum.lattice.basis[k];
    Json again = to_json(back);
    bool stable = to_json(stratum_from_json(again, ctx)) == again;
    pr.expect(same && stable && validate(back).ok() && classify(back).tag == f.expected, [&] { return f.name + " JSON round trip"; });
  }
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"octonion", "octonion.unit_law", [](auto ctx, auto& rng, auto& pr) {
         const Octonion one = unit<Scalar>();
         sample_axioms(ctx, rng, pr, [&](const Octonion& x, const Octonion&, const Octonion&) { return mul(one, x) == x && mul(x, one) == x; });
       }},
      {"octonion", "octonion.conj_antimultiplicative", [](auto ctx, auto& rng, auto& pr) {
         sample_axioms(ctx, rng, pr, [](const Octonion& x, const Octonion& y, const Octonion&) {
           return g2kit::conj(mul(x, y)) == mul(g2kit::conj(y), g2kit::conj(x));
         });
       }},
      {"octonion", "octonion.norm_multiplicative", [](auto ctx, auto& rng, auto& pr) {
         sample_axioms(ctx, rng, pr, [](const Octonion& x, const Octonion& y, const Octonion&) { return norm_q(mul(x, y)) == norm_q(x) * norm_q(y); });
       }},
      {"octonion", "octonion.form_adjoint", [](auto ctx, auto& rng, auto& pr) {
         sample_axioms(ctx, rng, pr, [](const Octonion& x, const Octonion& y, const Octonion& z) {
           return bilinear_f(mul(x, y), z) == bilinear_f(y, mul(g2kit::conj(x), z));
         });
       }},
      {"octonion", "octonion.alternativity", [](auto ctx, auto& rng, auto& pr) {
         sample_axioms(ctx, rng, pr, [](const Octonion& x, const Octonion& y, const Octonion&) {
           return mul(x, mul(x, y)) == mul(mul(x, x), y) && mul(mul(y, x), x) == mul(y, mul(x, x));
         });
       }},
      {"octonion", "octonion.doubling_formula", check_doubling},
      {"octonion", "octonion.idempotents", check_idempotents},
      {"triality", "triality.root_triples", check_root_triples},
      {"triality", "triality.diagonal_triples", check_diagonal_triples},
      {"triality", "triality.glw_triples", check_glw},
      {"triality", "triality.dim4_triples", check_dim4},
      {"triality", "triality.dim2_triples", check_dim2},
      {"triality", "triality.generator_family", check_generator_family},
      {"triality", "triality.derivation_fixed_point", check_derivation_fixed_point},
      {"norms", "norms.fixtures", check_norm_fixtures},
      {"norms", "norms.standard", check_standard_norm},
      {"norms", "norms.minorant", check_minorant},
      {"norms", "norms.lattice_duality", check_lattice_duality},
      {"filtration", "filtration.generator_stability", check_generator_stability},
      {"filtration", "filtration.cayley_basics", check_cayley_basics},
      {"filtration", "filtration.cayley_congruence", check_cayley_congruence},
      {"filtration", "filtration.psi_character", check_psi},
      {"filtration", "filtration.trace_invariance", check_trace_invariance},
      {"filtration", "filtration.moy_counterexample", check_moy},
      {"filtration", "filtration.gamma_perp_exhaustive", check_gamma_perp_exhaustive},
      {"filtration", "filtration.gamma_perp_random", check_gamma_perp_random},
      {"strata", "strata.validate_corpus", check_strata_validate},
      {"strata", "strata.classify_corpus", check_strata_classify},
      {"strata", "strata.lift_round_trip", check_strata_round_trip},
      {"strata", "strata.corruptions_caught", check_strata_corruptions},
      {"strata", "strata.json_round_trip", check_strata_serialization},
  };
  return defs;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::precision: return "precision-exhausted";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"octonion", "triality", "norms", "filtration", "strata"};
  return names;
}

bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

std::vector<std::string> suite_checks(const std::string& suite) {
  if (!is_suite(suite)) throw ConfigError("unknown suite '" + suite + "'");
  std::vector<std::string> out;
  for (const auto& s : suite_names())
    for (const auto& d : registry())
      if (d.suite == s && (suite == "all" || suite == s)) out.push_back(d.name);
  return out;
}

CheckResult run_check(const std::string& name, const FieldConfig& cfg, std::uint64_t seed) {
  const CheckDef* def = nullptr;
  for (const auto& d : registry())
    if (d.name == name) def = &d;
  if (!def) throw ConfigError("unknown check '" + name + "'");
  cfg.validate();
  const FieldContext* ctx = FieldContext::get(cfg);
  std::mt19937_64 rng(seed ^ fnv1a(name));
  CheckResult res;
  res.name = name;
  Probe pr;
  auto t0 = std::chrono::steady_clock::now();
  try {
    def->fn(ctx, rng, pr);
    if (pr.first) {
      res.status = CheckStatus::fail;
      res.counterexample = pr.first;
    }
  } catch (const PrecisionError& ex) {
    res.status = CheckStatus::precision;
    res.counterexample = ex.what();
  } catch (const std::exception& ex) {
    res.status = CheckStatus::fail;
    res.counterexample = std::string("error: ") + ex.what();
  }
  res.samples = pr.samples;
  res.wall_ms = ms_since(t0);
  return res;
}

SuiteReport run_suite(const std::string& suite, const FieldConfig& cfg, std::uint64_t seed) {
  auto names = suite_checks(suite);
  SuiteReport rep;
  rep.suite = suite;
  rep.config = cfg;
  rep.seed = seed;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& n : names) rep.checks.push_back(run_check(n, cfg, seed));
  rep.wall_ms = ms_since(t0);
  return rep;
}

bool SuiteReport::ok() const { return exit_code() == 0; }

int SuiteReport::exit_code() const {
  bool precision = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return 1;
    precision = precision || c.status == CheckStatus::precision;
  }
  return precision ? 3 : 0;
}

Json SuiteReport::to_json(bool with_time) const {
  Json cs = Json::array();
  int passed = 0, failed = 0, exhausted = 0;
  for (const auto& c : checks) {
    Json j = {{"name", c.name}, {"status", g2kit::to_string(c.status)}, {"samples", c.samples}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    cs.push_back(j);
    passed += c.status == CheckStatus::pass;
    failed += c.status == CheckStatus::fail;
    exhausted += c.status == CheckStatus::precision;
  }
  Json config = g2kit::to_json(this->config);
  config["seed"] = seed;
  Json j = {{"schema", "g2kit-report/1"},
            {"suite", suite},
            {"config", config},
            {"checks", cs},
            {"summary", {{"passed", passed}, {"failed", failed}, {"precision_exhausted", exhausted}, {"exit_code", exit_code()}}}};
  if (with_time) j["wall_time_ms"] = static_cast<std::int64_t>(wall_ms);
  return j;
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  os << "suite " << suite << "  p=" << config.p << " precision=" << config.precision << " extension=" << g2kit::to_string(config.ext)
     << " seed=" << seed << "\n";
  for (const auto& c : checks) {
    os << (c.status == CheckStatus::pass ? "PASS " : c.status == CheckStatus::fail ? "FAIL " : "PREC ") << c.name << "  (" << c.samples
       << " samples, " << static_cast<std::int64_t>(c.wall_ms) << " ms)\n";
    if (c.counterexample) os << "     " << *c.counterexample << "\n";
  }
  os << (exit_code() == 0 ? "all checks passed" : exit_code() == 1 ? "violations found" : "precision exhausted") << " in " << static_cast<std::int64_t>(wall_ms) << " ms\n";
  return os.str();
}

}  // namespace g2kit
