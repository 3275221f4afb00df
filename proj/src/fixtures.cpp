#include "g2kit/fixtures.hpp"

namespace g2kit {

namespace {

Octonion e(int i) { return basis<Scalar>(i); }

Poly linear(const Scalar& root) { return Poly({-root, Scalar(1)}); }
/// X² − tr(ξ)X + Q(ξ): minimal polynomial over F of multiplication by ξ ∈ F'.
Poly quadratic_of(const Octonion& xi) { return Poly({norm_q(xi), -trace(xi), Scalar(1)}); }

Stratum direct(const NormFn& norm, int m, int r, const EndV& beta, std::vector<Poly> factors, const std::string& why) {
  Stratum s;
  s.lattice = lattice_seq_with_period(norm, m);
  s.beta = beta;
  auto v = lattice_valuation(s.lattice, beta);
  s.n = v ? std::max<int>(1, static_cast<int>(-*v)) : std::max(1, r);
  s.r = r;
  for (const auto& f : factors) {
    SubspaceV k(kernel<Scalar>(f.eval(MatX<Scalar>(beta))));
    s.witness.decomposition.factors.push_back(f);
    s.witness.decomposition.kernels.push_back(k);
  }
  // Claimed valuations come from an independent computation of the blocks below.
  MatX<Scalar> kb(8, 0);
  for (const auto& k : s.witness.decomposition.kernels) {
    MatX<Scalar> next(8, kb.cols() + k.dim());
    next << kb, k.basis();
    kb = next;
  }
  MatX<Scalar> kinv = invert<Scalar>(kb);
  int at = 0;
  for (const auto& k : s.witness.decomposition.kernels) {
    MatX<Scalar> sel = MatX<Scalar>::Zero(8, 8);
    for (int j = at; j < at + k.dim(); ++j) sel(j, j) = Scalar(1);
    at += k.dim();
    auto bv = lattice_valuation(s.lattice, EndV(beta * kb * sel * kinv));
    s.witness.valuations.push_back(bv ? -*bv : r);
  }
  s.justification = why;
  return s;
}

Sl3Stratum sl3_stratum(const NormFn& norm, int m, int r, const Mat3& phi, std::vector<Poly> factors) {
  Sl3Stratum s;
  s.norm = norm;
  s.m = m;
  s.r = r;
  s.beta = phi;
  s.factors = std::move(factors);
  auto v = matrix_valuation(MatX<Scalar>(phi), norm.values, m);
  s.n = v ? std::max<int>(1, static_cast<int>(-*v)) : std::max(1, r);
  return s;
}

NormFn w_plus_norm(const Rational& a1, const Rational& a2, const Rational& a3) { return {{e(1), e(2), e(3)}, {a1, a2, a3}}; }

Mat3 diag3(const Scalar& a, const Scalar& b, const Scalar& c) {
  Mat3 m = Mat3::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

struct Su21Data {
  Octonion c;
  int e;
  std::array<Octonion, 3> w;
};
Su21Data su21_data(const Scalar& mu, int ram) {
  return {e(1) + e(-1) * mu, ram, {e(2), (e(-4) - e(4)) * Scalar(2), e(-2) * Scalar(2)}};
}

Su21Stratum su21_stratum(const Su21Data& d, int a, int m, int r, const Scalar& x, const Scalar& y) {
  const Octonion one = unit<Scalar>();
  Su21Stratum s;
  s.norm = {d.c, d.w, {Rational(-a), Rational(0), Rational(a)}, d.e};
  s.m = m;
  s.r = r;
  for (auto& row : s.beta)
    for (auto& q : row) q = Octonion::Zero();
  s.beta[0][0] = one * x + d.c * y;
  s.beta[1][1] = d.c * (Scalar(-2) * y);
  s.beta[2][2] = one * (-x) + d.c * y;
  for (int k = 0; k < 3; ++k) s.factors.push_back(quadratic_of(s.beta[k][k]));
  NormFn fw = rescale_to_f(s.norm);
  EndV lifted = lift_su21(s.beta, d.c, d.w);
  auto v = lattice_valuation(fw.basis, fw.values, m, lifted);
  s.n = v ? std::max<int>(1, static_cast<int>(-*v)) : std::max(1, r);
  return s;
}

NormFn split_dim4_part(const Rational& a, const Rational& b) {
  Scalar f2 = bilinear_f(e(2), e(-2)), f3 = bilinear_f(e(3), e(-3));
  return {{e(2), e(-2) * f2.inv(), e(3), e(-3) * f3.inv()}, {a, -a, b, -b}};
}

Octonion anisotropic_in(const SubspaceV& w) {
  for (const auto& b : orthogonal_basis(w.vectors()))
    if (!norm_q(b).is_zero()) return b;
  throw std::logic_error("no anisotropic vector");
}

}  // namespace

CompositionSubalgebra split_quaternion_fixture() { return double_algebra(standard_hyperbolic_plane(), e(1) + e(-1)); }

CompositionSubalgebra division_quaternion_fixture(const FieldContext* ctx) {
  Scalar nu = ctx->nonsquare_unit();
  return double_algebra(double_algebra(center_algebra(), e(1) - e(-1) * nu), e(2) - e(-2) * ctx->uniformizer());
}

EndV quaternion_derivation(const CompositionSubalgebra& v0, const Octonion& c, const Octonion& a) {
  if (v0.dim() != 4) throw DomainError("need a quaternion subalgebra");
  if (!v0.space().contains(c) || !trace(c).is_zero()) throw DomainError("c must be a trace-zero element of V⁰");
  if (!v0.space().orthogonal().contains(a) || norm_q(a).is_zero()) throw DomainError("a must be anisotropic in (V⁰)^⊥");
  std::vector<Octonion> b, im;
  for (const auto& v : v0.basis) {
    b.push_back(v);
    im.push_back(Octonion::Zero());
  }
  for (const auto& v : v0.basis) {
    b.push_back(mul(v, a));
    im.push_back(mul(mul(c, v), a));
  }
  return end_from_images(b, im);
}

std::vector<StratumFixture> strata_corpus(const FieldContext* ctx) {
  const Scalar t = ctx->uniformizer(), ti = t.inv(), nu = ctx->nonsquare_unit();
  const Rational z(0), third(1, 3);
  const CompositionSubalgebra d = standard_hyperbolic_plane();
  std::vector<StratumFixture> out;
  auto from_sl3 = [&](const std::string& name, SemisimpleCase c, const Sl3Stratum& s) {
    out.push_back({name, c, lift_type_D(s, d), s, std::nullopt, d});
  };
  auto from_su21 = [&](const std::string& name, const Su21Stratum& s) {
    out.push_back({name, SemisimpleCase::quadratic_extension, lift_type_D(s), std::nullopt, s, std::nullopt});
  };

  // (i): β_{W⁺} without zero eigenvalue.
  {
    Scalar a = t.inv() * ti, b = ti, c = -(a + b);
    Mat3 phi = diag3(a, b, c);
    std::vector<Poly> f = {linear(a), linear(b), linear(c)};
    from_sl3("i-split-torus", SemisimpleCase::hyperbolic_plane, sl3_stratum(w_plus_norm(z, z, z), 1, 0, phi, f));
    from_sl3("i-split-torus-r1", SemisimpleCase::hyperbolic_plane, sl3_stratum(w_plus_norm(z, z, z), 1, 1, phi, f));
  }
  {
    Mat3 phi = Mat3::Zero();
    phi(1, 0) = Scalar(1);
    phi(2, 1) = Scalar(1);
    phi(0, 2) = ti;
    from_sl3("i-ramified-cubic", SemisimpleCase::hyperbolic_plane,
             sl3_stratum(w_plus_norm(third, z, -third), 3, 0, phi, {Poly({-ti, Scalar(0), Scalar(0), Scalar(1)})}));
  }
  {
    Scalar x = ti, zz = ti;
    Mat3 phi = Mat3::Zero();
    phi(0, 0) = Scalar(-2) * x;
    phi(1, 1) = x;
    phi(2, 2) = x;
    phi(1, 2) = nu * zz;
    phi(2, 1) = zz;
    from_sl3("i-line-plus-unramified", SemisimpleCase::hyperbolic_plane,
             sl3_stratum(w_plus_norm(z, z, z), 1, 0, phi, {linear(Scalar(-2) * x), Poly({x * x - nu * zz * zz, Scalar(-2) * x, Scalar(1)})}));
  }

  // (ii): D = F[c] anisotropic.
  from_su21("ii-unramified", su21_stratum(su21_data(-nu, 1), 0, 1, 0, ti, ti));
  from_su21("ii-unramified-a1", su21_stratum(su21_data(-nu, 1), 1, 1, 0, ti, Scalar(1)));
  from_su21("ii-ramified", su21_stratum(su21_data(-t, 2), 0, 2, 0, ti, ti));
  from_su21("ii-ramified-a1", su21_stratum(su21_data(-t, 2), 1, 2, 0, ti * ti, ti));

  // (iii): a zero eigenvalue on W⁺ enlarges V⁰ to a split quaternion algebra and β_W² = λ².
  for (auto [name, lam, pl] : {std::tuple{"iii-gl2-std", ti, w_plus_norm(z, z, z)},
                               std::tuple{"iii-gl2-m3", ti * ti, w_plus_norm(third, z, -third)}}) {
    int m = name == std::string("iii-gl2-m3") ? 3 : 1;
    from_sl3(name, SemisimpleCase::dim4_split_eigen,
             sl3_stratum(pl, m, 0, diag3(Scalar(0), lam, -lam), {Poly::x(), linear(lam), linear(-lam)}));
  }
  {
    CompositionSubalgebra q = split_quaternion_fixture();
    NormFn full = extend_dim4(split_dim4_part(Rational(1), Rational(2)), q);
    EndV beta = lift_sl3(diag3(Scalar(0), ti, -ti));
    out.push_back({"iii-gl2-dim4-norm", SemisimpleCase::dim4_split_eigen,
                   direct(full, 1, 0, beta, {Poly::x(), linear(ti), linear(-ti)},
                          "eigenvalues ±t⁻¹ have distinct residues after scaling by t"),
                   std::nullopt, std::nullopt, std::nullopt});
  }

  // (iv): β_W² = u with u not a square.
  {
    CompositionSubalgebra q = split_quaternion_fixture();
    Octonion a = e(2) + e(-2);
    struct Item { const char* name; Octonion c; NormFn part; };
    for (const auto& it : {Item{"iv-split-unramified", Octonion((e(1) - e(-1) * nu) * ti), split_dim4_part(z, z)},
                           Item{"iv-split-ramified", Octonion((e(1) - e(-1) * t) * ti), split_dim4_part(Rational(1), Rational(1))}}) {
      EndV beta = quaternion_derivation(q, it.c, a);
      Scalar u = mul(it.c, it.c)[pos(4)];
      out.push_back({it.name, SemisimpleCase::dim4_hermitian,
                     direct(extend_dim4(it.part, q), 1, 0, beta, {Poly::x(), Poly({-u, Scalar(0), Scalar(1)})},
                            "β_W generates the field F[√u]; a single simple block on W"),
                     std::nullopt, std::nullopt, std::nullopt});
    }
  }
  {
    CompositionSubalgebra q = division_quaternion_fixture(ctx);
    SubspaceV w = q.space().orthogonal();
    Octonion a = anisotropic_in(w);
    NormFn full = extend_dim4(half_valuation_norm(w.vectors()), q);
    Octonion a1 = e(1) - e(-1) * nu, a2 = e(2) - e(-2) * t;
    struct Item { const char* name; Octonion c; };
    for (const auto& it : {Item{"iv-division-ramified", Octonion(a2 * ti)},
                           Item{"iv-division-unramified", Octonion(a1 * ti)}}) {
      EndV beta = quaternion_derivation(q, it.c, a);
      Scalar u = mul(it.c, it.c)[pos(4)];
      out.push_back({it.name, SemisimpleCase::dim4_hermitian,
                     direct(full, lattice_seq_from_norm(full).m, 0, beta, {Poly::x(), Poly({-u, Scalar(0), Scalar(1)})},
                            "β_W generates the field F[√u]; a single simple block on W"),
                     std::nullopt, std::nullopt, std::nullopt});
    }
  }

  // Null stratum.
  from_sl3("null", SemisimpleCase::null, sl3_stratum(w_plus_norm(z, z, z), 1, 1, Mat3::Zero(), {Poly::x()}));
  return out;
}

std::vector<CorruptedFixture> corrupted_strata(const FieldContext* ctx) {
  auto corpus = strata_corpus(ctx);
  auto find = [&](const std::string& n) -> Stratum {
    for (const auto& f : corpus)
      if (f.name == n) return f.stratum;
    throw std::logic_error("no fixture " + n);
  };
  std::vector<CorruptedFixture> out;
  {
    Stratum s = find("i-split-torus");
    s.n -= 1;
    out.push_back({"n-below-depth", s, "valuation"});
  }
  {
    Stratum s = find("iv-division-unramified");
    s.beta = s.beta * ctx->uniformizer().inv();
    auto& f = s.witness.decomposition.factors;
    f[1] = Poly({f[1].coeff(0) * ctx->uniformizer().inv() * ctx->uniformizer().inv(), Scalar(0), Scalar(1)});
    out.push_back({"beta-rescaled-n-kept", s, "valuation"});
  }
  {
    Stratum s = find("iii-gl2-std");
    s.witness.valuations.back() += 1;
    out.push_back({"block-valuation-claim", s, "block_valuations"});
  }
  {
    Stratum s = find("i-split-torus");
    auto& f = s.witness.decomposition.factors;
    // Ψ₁ picks up the root of the last reflected factor.
    f[1] = f[1] * f.back();
    out.push_back({"factor-shares-root", s, "coprime"});
  }
  {
    Stratum s = find("iv-division-ramified");
    auto& f = s.witness.decomposition.factors;
    f[0] = f[0] * f[1];
    out.push_back({"kernel-factor-absorbs-W", s, "coprime"});
  }
  return out;
}

std::string to_string(NormFamily f) {
  switch (f) {
    case NormFamily::sl3: return "sl3";
    case NormFamily::su21: return "su21";
    case NormFamily::dim4: return "dim4";
  }
  return "sl3";
}

std::vector<NormFixture> norm_fixtures(const FieldContext* ctx) {
  const Scalar t = ctx->uniformizer(), nu = ctx->nonsquare_unit();
  std::vector<NormFixture> out;
  const CompositionSubalgebra d = standard_hyperbolic_plane();
  auto perturb = [](NormFn full, int k, const Rational& by) {
    full.values[k] += by;
    return full;
  };
  for (auto [name, a1, a2, a3] : {std::tuple{"sl3-standard", Rational(0), Rational(0), Rational(0)},
                                  std::tuple{"sl3-m3", Rational(1, 3), Rational(1, 3), Rational(-2, 3)},
                                  std::tuple{"sl3-m3-chamber", Rational(1, 3), Rational(0), Rational(-1, 3)},
                                  std::tuple{"sl3-m2", Rational(1, 2), Rational(-1, 2), Rational(0)},
                                  std::tuple{"sl3-integral", Rational(1), Rational(0), Rational(-1)}}) {
    NormFn part = w_plus_norm(a1, a2, a3);
    NormFn full = extend_sl3(part, d);
    out.push_back({name, NormFamily::sl3, full, part, perturb(full, 0, Rational(1, 2))});
  }
  for (auto [name, mu, ee, a] : {std::tuple{"su21-unramified", -nu, 1, 0}, std::tuple{"su21-unramified-a1", -nu, 1, 1},
                                 std::tuple{"su21-ramified", Scalar(-t), 2, 0}, std::tuple{"su21-ramified-a1", Scalar(-t), 2, 1},
                                 std::tuple{"su21-ramified-a3", Scalar(-t), 2, 3}}) {
    Su21Data sd = su21_data(mu, ee);
    HermitianNormFn h{sd.c, sd.w, {Rational(-a), Rational(0), Rational(a)}, sd.e};
    NormFn full = extend_su21(h);
    out.push_back({name, NormFamily::su21, full, rescale_to_f(h), perturb(full, 1, Rational(1, 2))});
  }
  CompositionSubalgebra qs = split_quaternion_fixture();
  for (auto [name, a, b] : {std::tuple{"dim4-split-standard", Rational(0), Rational(0)},
                            std::tuple{"dim4-split-1-2", Rational(1), Rational(2)},
                            std::tuple{"dim4-split-thirds", Rational(1, 3), Rational(-2, 3)}}) {
    NormFn part = split_dim4_part(a, b);
    NormFn full = extend_dim4(part, qs);
    out.push_back({name, NormFamily::dim4, full, part, perturb(full, 2, Rational(1, 2))});
  }
  {
    CompositionSubalgebra qd = division_quaternion_fixture(ctx);
    NormFn part = half_valuation_norm(qd.space().orthogonal().vectors());
    NormFn full = extend_dim4(part, qd);
    out.push_back({"dim4-division", NormFamily::dim4, full, part, perturb(full, 1, Rational(1, 2))});
    CompositionSubalgebra qd2 = double_algebra(double_algebra(center_algebra(), e(1) - e(-1) * nu), e(2) - e(-2) * (t * nu));
    NormFn part2 = half_valuation_norm(qd2.space().orthogonal().vectors());
    NormFn full2 = extend_dim4(part2, qd2);
    out.push_back({"dim4-division-tnu", NormFamily::dim4, full2, part2, perturb(full2, 1, Rational(1, 2))});
  }
  return out;
}

}  // namespace g2kit
