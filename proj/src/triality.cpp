#include "g2kit/triality.hpp"

#include <set>
#include <stdexcept>

namespace g2kit {

namespace {

int plus1(int i) { return i % 3 + 1; }
int plus2(int i) { return plus1(plus1(i)); }

EndV gen_u(int i, int j, const Scalar& lambda, bool lie) { return lie ? U_ij(i, j, lambda) : u_ij(i, j, lambda); }

Octonion inverse_of(const Octonion& x) {
  Scalar q = norm_q(x);
  if (q.is_zero()) throw DomainError("isotropic octonion has no inverse");
  return g2kit::conj(x) * q.inv();
}

MatD3 scale_left(const Octonion& s, const MatD3& g) {
  MatD3 out;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) out[k][l] = mul(s, g[k][l]);
  return out;
}

}  // namespace

EndV hat(const EndV& t) {
  static const EndV k = conj_matrix<Scalar>();
  return k * t * k;
}

bool check_related(const EndV& t1, const EndV& t2, const EndV& t3, bool lie) {
  for (int k = 0; k < 8; ++k) {
    Octonion ek = basis<Scalar>(label(k));
    Octonion a = t2.col(k);
    for (int l = 0; l < 8; ++l) {
      Octonion el = basis<Scalar>(label(l));
      Octonion b = t3.col(l);
      Octonion lhs = t1 * mul(ek, el);
      Octonion rhs = lie ? Octonion(mul(a, el) + mul(ek, b)) : mul(a, b);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

TrialityTriple rotate(const TrialityTriple& t) { return {hat(t.t2), t.t3, hat(t.t1), t.lie}; }
TrialityTriple swap(const TrialityTriple& t) { return {t.t2, t.t1, hat(t.t3), t.lie}; }

std::vector<TrialityTriple> orbit_triples(const TrialityTriple& t) {
  if (!check_related(t)) throw InvalidTripleError("input triple is not related");
  EndV h1 = hat(t.t1), h2 = hat(t.t2), h3 = hat(t.t3);
  return {t,
          {t.t2, t.t1, h3, t.lie},
          {t.t3, h2, t.t1, t.lie},
          {h1, h3, h2, t.lie},
          {h2, t.t3, h1, t.lie},
          {h3, h1, t.t2, t.lie}};
}

TrialityTriple root_triple(int i, int pattern, const Scalar& lambda, bool lie) {
  if (i < 1 || i > 3) throw DomainError("root_triple needs i ∈ {1, 2, 3}");
  int ip = plus1(i), ipp = plus2(i);
  if (pattern == 0)
    return {gen_u(-i, -ipp, lambda, lie), gen_u(ip, 4, lambda, lie), gen_u(-4, ip, lambda, lie), lie};
  if (pattern == 1)
    return {gen_u(i, ipp, lambda, lie), gen_u(-ip, -4, lambda, lie), gen_u(4, -ip, lambda, lie), lie};
  throw DomainError("root_triple pattern must be 0 or 1");
}

TrialityTriple fixed_root_triple(int i, int j, const Scalar& lambda, bool lie) {
  if (i == 0 || j == 0 || std::abs(i) > 3 || std::abs(j) > 3 || (i > 0) == (j > 0) || i == -j)
    throw DomainError("fixed root triples need i, j of opposite sign, distinct from ±4, i ≠ −j");
  EndV u = gen_u(i, j, lambda, lie);
  return {u, u, u, lie};
}

TrialityTriple diag_lie_triple(int i, const Scalar& s) {
  if (i < 1 || i > 4) throw DomainError("diag_lie_triple needs 1 ≤ i ≤ 4");
  Scalar h = s * Scalar::rational(1, 2);
  TrialityTriple t{D_i(i, s), D_i(i, h), EndV::Zero(), true};
  if (i <= 3) {
    t.t3 = D_i(4, h) + D_i(i, h);
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      t.t2 += D_i(j, -h);
      if (j != 4) t.t3 += D_i(j, -h);
    }
  } else {
    for (int j = 1; j <= 3; ++j) t.t2 += D_i(j, -h);
    for (int j = 1; j <= 4; ++j) t.t3 += D_i(j, h);
  }
  return t;
}

TrialityTriple solve_glw(const Scalar& u, const Mat3& g, const Scalar& lambda) {
  Scalar dg = det<Scalar>(g);
  if (lambda * lambda != u * dg) throw InvalidWitnessError("λ² ≠ u·det g");
  Scalar li = lambda.inv();
  return {iota(u, g), iota(li * u, Mat3(g * li)), iota(lambda, Mat3(g * (u * li))), false};
}

namespace {

template <class FX, class FY>
EndV dim4_build(const Dim4Data& d, FX fx, FY fy) {
  std::vector<Octonion> b, im;
  for (const auto& x : d.v0.basis) {
    b.push_back(x);
    im.push_back(fx(x));
  }
  for (const auto& y : d.v0.basis) {
    b.push_back(mul(y, d.a));
    im.push_back(mul(fy(y), d.a));
  }
  return end_from_images(b, im);
}

void check_dim4(const Dim4Data& d) {
  if (d.v0.dim() != 4) throw DomainError("dimension-4 data needs a dimension-4 V0");
  SubspaceV s = d.v0.space();
  for (const Octonion* x : {&d.alpha, &d.u, &d.delta, &d.v})
    if (!s.contains(*x)) throw DomainError("dimension-4 data must lie in V0");
  if (norm_q(d.alpha) != Scalar(1) || norm_q(d.delta) != Scalar(1))
    throw DomainError("α and δ must have norm 1");
  for (const auto& x : d.v0.basis)
    if (!bilinear_f(x, d.a).is_zero()) throw DomainError("a must be orthogonal to V0");
}

}  // namespace

EndV dim4_map(const Dim4Data& d) {
  check_dim4(d);
  Octonion ui = inverse_of(d.u), vi = inverse_of(d.v);
  return dim4_build(
      d, [&](const Octonion& x) { return mul(d.alpha, mul(mul(d.u, x), ui)); },
      [&](const Octonion& y) { return mul(d.delta, mul(mul(d.v, y), vi)); });
}

TrialityTriple solve_dim4(const Dim4Data& d, const Scalar& xi) {
  check_dim4(d);
  if (xi * xi != norm_q(d.u) / norm_q(d.v)) throw InvalidWitnessError("ξ² ≠ Q(u/v)");
  Octonion ui = inverse_of(d.u), vi = inverse_of(d.v), ai = inverse_of(d.alpha);
  Scalar xinv = xi.inv();
  EndV t2 = dim4_build(
      d, [&](const Octonion& x) { return Octonion(mul(mul(d.alpha, mul(d.u, x)), vi) * xinv); },
      [&](const Octonion& y) { return Octonion(mul(d.delta, mul(mul(d.v, y), ui)) * xi); });
  EndV t3 = dim4_build(
      d, [&](const Octonion& x) { return Octonion(mul(mul(d.v, x), ui) * xi); },
      [&](const Octonion& y) { return Octonion(mul(mul(d.delta, mul(mul(d.v, y), ui)), ai) * xi); });
  return {dim4_map(d), t2, t3, false};
}

EndV dim2_map(const Octonion& c, const std::array<Octonion, 3>& w, const Octonion& lambda, const MatD3& g) {
  std::vector<Octonion> b = {unit<Scalar>(), c};
  std::vector<Octonion> im = {lambda, mul(lambda, c)};
  for (int l = 0; l < 3; ++l) {
    Octonion img = Octonion::Zero();
    for (int k = 0; k < 3; ++k) img += mul(g[k][l], w[k]);
    b.push_back(w[l]);
    im.push_back(img);
    b.push_back(mul(c, w[l]));
    im.push_back(mul(c, img));
  }
  return end_from_images(b, im);
}

Octonion det_d(const MatD3& g) {
  auto m = [](const Octonion& x, const Octonion& y) { return mul(x, y); };
  return m(g[0][0], m(g[1][1], g[2][2]) - m(g[1][2], g[2][1])) -
         m(g[0][1], m(g[1][0], g[2][2]) - m(g[1][2], g[2][0])) +
         m(g[0][2], m(g[1][0], g[2][1]) - m(g[1][1], g[2][0]));
}

TrialityTriple solve_dim2(const Dim2Data& d, const Octonion& xi) {
  SubspaceV ds = SubspaceV::span({unit<Scalar>(), d.c});
  if (!ds.contains(xi) || norm_q(xi) != Scalar(1)) throw InvalidWitnessError("ξ must be a norm-1 element of D");
  if (mul(xi, xi) != mul(d.lambda, g2kit::conj(det_d(d.g)))) throw InvalidWitnessError("ξ² ≠ λ·g2kit::conj(det g)");
  EndV t1 = dim2_map(d.c, d.w, d.lambda, d.g);
  if (!is_isometry(t1)) throw DomainError("t1 is not an isometry");
  Octonion xinv = g2kit::conj(xi);
  EndV t2 = dim2_map(d.c, d.w, mul(xinv, d.lambda), scale_left(xi, d.g));
  EndV t3 = dim2_map(d.c, d.w, xi, scale_left(mul(xi, g2kit::conj(d.lambda)), d.g));
  return {t1, t2, t3, false};
}

Octonion barwedge(const Octonion& c, const Octonion& a, const Octonion& b, const Octonion& w, const Octonion& wp) {
  const std::array<Octonion, 3> bs = {a, b, mul(a, b)};
  MatX<Scalar> fb(8, 6);
  for (int k = 0; k < 3; ++k) {
    fb.col(2 * k) = bs[k];
    fb.col(2 * k + 1) = mul(c, bs[k]);
  }
  MatX<Scalar> rhs(8, 2);
  rhs.col(0) = w;
  rhs.col(1) = wp;
  auto sol = solve<Scalar>(fb, rhs);
  if (!sol) throw DomainError("arguments of ∧̄ must lie in W");
  const Octonion one = unit<Scalar>();
  std::array<Octonion, 3> x, y;
  for (int k = 0; k < 3; ++k) {
    x[k] = one * (*sol)(2 * k, 0) + c * (*sol)(2 * k + 1, 0);
    y[k] = one * (*sol)(2 * k, 1) + c * (*sol)(2 * k + 1, 1);
  }
  std::array<Octonion, 3> cof = {mul(x[1], y[2]) - mul(x[2], y[1]), mul(x[2], y[0]) - mul(x[0], y[2]),
                                 mul(x[0], y[1]) - mul(x[1], y[0])};
  Scalar qab = norm_q(bs[2]);
  Octonion out = Octonion::Zero();
  for (int k = 0; k < 3; ++k) out += mul(g2kit::conj(cof[k]), bs[k]) * (qab / norm_q(bs[k]));
  return out;
}

bool is_g2_element(const EndV& g) { return is_automorphism(g); }
bool is_g2_lie(const EndV& x) { return is_derivation(x); }

const std::vector<LieGenerator>& lie_generators() {
  static const std::vector<LieGenerator> gens = [] {
    std::vector<LieGenerator> out;
    const Scalar one(1);
    auto probe_u = [](int i, int j) { return std::pair<int, int>{pos(-j), pos(i)}; };
    auto name_u = [](int i, int j) { return "U(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    for (int i = 1; i <= 4; ++i) out.push_back({"D" + std::to_string(i), D_i(i, one), diag_lie_triple(i, one), pos(i), pos(i), GeneratorFamily::diagonal, i, 0});
    for (int i = 1; i <= 3; ++i) {
      int ip = plus1(i), ipp = plus2(i);
      for (int pattern = 0; pattern < 2; ++pattern) {
        TrialityTriple t = root_triple(i, pattern, one, true);
        auto orb = orbit_triples(t);
        int s = pattern == 0 ? -1 : 1;
        std::array<std::pair<int, int>, 3> idx = {std::pair{s * i, s * ipp}, std::pair{-s * ip, -4 * s}, std::pair{4 * s, -s * ip}};
        for (int c = 0; c < 3; ++c) {
          auto [a, b] = idx[c];
          auto [r, col] = probe_u(a, b);
          out.push_back({name_u(a, b), orb[c].t1, orb[c], r, col, GeneratorFamily::root, i, pattern, c});
        }
      }
    }
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        auto [r, col] = probe_u(i, -j);
        out.push_back({name_u(i, -j), U_ij(i, -j, one), fixed_root_triple(i, -j, one, true), r, col, GeneratorFamily::fixed, i, -j});
      }
    std::set<std::pair<int, int>> probes;
    for (const auto& g : out) {
      if (!probes.insert({g.row, g.col}).second) throw std::logic_error("generator probes collide");
      if (g.x(g.row, g.col) != Scalar(1)) throw std::logic_error("generator probe is not 1");
    }
    if (out.size() != 28) throw std::logic_error("so(V) generator family must have 28 members");
    return out;
  }();
  return gens;
}

TrialityTriple generator_lie_triple(const LieGenerator& g, const Scalar& lambda) {
  switch (g.family) {
    case GeneratorFamily::diagonal:
      return diag_lie_triple(g.a, lambda);
    case GeneratorFamily::root:
      return orbit_triples(root_triple(g.a, g.b, lambda, true))[g.orbit];
    case GeneratorFamily::fixed:
      return fixed_root_triple(g.a, g.b, lambda, true);
  }
  throw std::logic_error("unknown generator family");
}

TrialityTriple generator_group_triple(const LieGenerator& g, const Scalar& lambda, const std::optional<Scalar>& sqrt_c) {
  switch (g.family) {
    case GeneratorFamily::diagonal: {
      if (!sqrt_c) throw InvalidWitnessError("diagonal group triples need a square root of C(λ)");
      Scalar half = Scalar::rational(1, 2);
      Scalar c = (Scalar(1) + lambda * half) * (Scalar(1) - lambda * half).inv();
      if (*sqrt_c * *sqrt_c != c) throw InvalidWitnessError("sqrt_c² ≠ C(λ)");
      if (g.a == 4) return solve_glw(c, Mat3::Identity(), *sqrt_c);
      Mat3 m = Mat3::Identity();
      m(g.a - 1, g.a - 1) = c;
      return solve_glw(Scalar(1), m, *sqrt_c);
    }
    case GeneratorFamily::root:
      return orbit_triples(root_triple(g.a, g.b, lambda, false))[g.orbit];
    case GeneratorFamily::fixed:
      return fixed_root_triple(g.a, g.b, lambda, false);
  }
  throw std::logic_error("unknown generator family");
}

TrialityTriple solve_lie(const EndV& x) {
  if (!is_so(x)) throw DomainError("X is not in so(V)");
  TrialityTriple out{EndV::Zero(), EndV::Zero(), EndV::Zero(), true};
  EndV rebuilt = EndV::Zero();
  for (const auto& g : lie_generators()) {
    const Scalar& lambda = x(g.row, g.col);
    if (lambda.is_zero()) continue;
    rebuilt += g.x * lambda;
    out.t1 += g.triple.t1 * lambda;
    out.t2 += g.triple.t2 * lambda;
    out.t3 += g.triple.t3 * lambda;
  }
  if (rebuilt != x) throw DomainError("X is outside the span of the generator family");
  return out;
}

std::vector<EndV> g2_generators() {
  static const std::vector<EndV> basis_g2 = [] {
    std::vector<EndV> out;
    MatX<Scalar> acc(64, 0);
    const Scalar sixth = Scalar::rational(1, 6);
    for (const auto& g : lie_generators()) {
      const TrialityTriple& t = g.triple;
      EndV p = (t.t1 + t.t2 + t.t3 + hat(t.t1) + hat(t.t2) + hat(t.t3)) * sixth;
      MatX<Scalar> next(64, acc.cols() + 1);
      next << acc, Eigen::Map<const VecX<Scalar>>(p.data(), 64);
      if (rank<Scalar>(next) > acc.cols()) {
        acc = next;
        out.push_back(p);
      }
    }
    if (out.size() != 14) throw std::logic_error("fixed points of triality must span a 14-dimensional algebra");
    return out;
  }();
  return basis_g2;
}

}  // namespace g2kit
