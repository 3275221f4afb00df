#include "g2kit/octonion.hpp"

#include <cmath>
#include <stdexcept>

#include "g2kit/rational_traits.hpp"

namespace g2kit {

namespace {

MultTable build_table() {
  MultTable tab{};
  std::array<std::array<bool, 8>, 8> set{};
  auto put = [&](int i, int j, int sign, int k) {
    int a = pos(i), b = pos(j);
    if (set[a][b]) throw std::logic_error("multiplication table entry assigned twice");
    set[a][b] = true;
    tab[a][b] = {sign, sign == 0 ? 0 : pos(k)};
  };
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (int i = 1; i <= 3; ++i) {
    put(i, i, 0, 0);
    put(-i, -i, 0, 0);
  }
  for (const auto& c : cyc) {
    int i = c[0], ip = c[1], ipp = c[2];
    put(i, ip, +1, -ipp);
    put(ip, i, -1, -ipp);
    put(-i, -ip, +1, ipp);
    put(-ip, -i, -1, ipp);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      put(-j, i, i == j ? -1 : 0, 4);
      put(j, -i, i == j ? -1 : 0, -4);
    }
  put(-4, -4, +1, -4);
  put(4, 4, +1, 4);
  put(-4, 4, 0, 0);
  put(4, -4, 0, 0);
  for (int i = 1; i <= 3; ++i) {
    put(-4, i, +1, i);
    put(i, 4, +1, i);
    put(-4, -i, 0, 0);
    put(-i, 4, 0, 0);
    put(-i, -4, +1, -i);
    put(4, -i, +1, -i);
    put(i, -4, 0, 0);
    put(4, i, 0, 0);
  }
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (!set[a][b]) throw std::logic_error("multiplication table incomplete");
  return tab;
}

// Solve y² = T(y)·y − Q(y)·𝟙 over Q for an integer vector y.
std::pair<Rational, Rational> quadratic_relation(const Oct<Rational>& y) {
  Oct<Rational> one = unit<Rational>();
  Oct<Rational> y2 = mul<Rational>(y, y);
  MatX<Rational> a(8, 2);
  a.col(0) = y;
  a.col(1) = -one;
  if (rank<Rational>(a) < 2) {
    Rational lambda = y[pos(4)];
    return {2 * lambda, lambda * lambda};
  }
  auto sol = solve<Rational>(a, y2);
  if (!sol) throw std::logic_error("basis element violates the quadratic relation");
  return {(*sol)(0, 0), (*sol)(1, 0)};
}

FormConstants derive_forms() {
  FormConstants fc;
  std::array<Rational, 8> q{};
  for (int k = 0; k < 8; ++k) {
    Oct<Rational> e = Oct<Rational>::Zero();
    e[k] = 1;
    auto [t, qq] = quadratic_relation(e);
    fc.trace[k] = static_cast<int>(t.numerator());
    q[k] = qq;
    fc.q[k] = static_cast<int>(qq.numerator());
    fc.gram[k][k] = static_cast<int>(2 * qq.numerator());
  }
  for (int k = 0; k < 8; ++k)
    for (int l = k + 1; l < 8; ++l) {
      Oct<Rational> y = Oct<Rational>::Zero();
      y[k] = 1;
      y[l] = 1;
      Rational f = quadratic_relation(y).second - q[k] - q[l];
      fc.gram[k][l] = fc.gram[l][k] = static_cast<int>(f.numerator());
    }
  // Assert the Witt pattern: Q(e_i) = 0, f(e_i, e_{-i}) = 1, trace(x) = f(x, 𝟙).
  for (int k = 0; k < 8; ++k) {
    if (fc.q[k] != 0) throw std::logic_error("derived Q(e_i) is not zero");
    for (int l = 0; l < 8; ++l) {
      int expect = label(l) == -label(k) ? 1 : 0;
      if (fc.gram[k][l] != expect) throw std::logic_error("derived f differs from the Witt pairing");
    }
    if (fc.trace[k] != fc.gram[k][pos(-4)] + fc.gram[k][pos(4)])
      throw std::logic_error("derived trace differs from f(x, 1)");
  }
  return fc;
}

Scalar half() { return Scalar::rational(1, 2); }

const FieldContext* context_of(const std::vector<Octonion>& vs) {
  for (const auto& v : vs)
    for (int k = 0; k < 8; ++k)
      if (v[k].context()) return v[k].context();
  return nullptr;
}

bool rational_square(const Scalar& x) {
  auto sq = [](std::int64_t n) {
    if (n < 0) return false;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
      if (c * c == n) return true;
    return false;
  };
  return sq(x.const_num()) && sq(x.const_den());
}

bool square_in(const Scalar& x, const FieldContext* ctx) {
  if (x.has_context()) return is_square(x);
  if (rational_square(x)) return true;
  if (!ctx) throw UnsupportedError("square class of a context-free constant is undetermined");
  return is_square(ctx->adopt(x));
}

}  // namespace

const MultTable& mult_table() {
  static const MultTable tab = build_table();
  return tab;
}

const FormConstants& form_constants() {
  static const FormConstants fc = derive_forms();
  return fc;
}

std::string to_string(SubalgebraKind k) {
  switch (k) {
    case SubalgebraKind::center: return "center";
    case SubalgebraKind::split_dim2: return "split-dim2";
    case SubalgebraKind::field_dim2: return "field-dim2";
    case SubalgebraKind::split_dim4: return "split-dim4";
    case SubalgebraKind::division_dim4: return "division-dim4";
    case SubalgebraKind::full: return "full";
  }
  return "center";
}

CompositionSubalgebra center_algebra() {
  CompositionSubalgebra d;
  d.basis = {unit<Scalar>()};
  d.kind = SubalgebraKind::center;
  return d;
}

CompositionSubalgebra standard_hyperbolic_plane() {
  CompositionSubalgebra d;
  d.basis = {basis<Scalar>(-4), basis<Scalar>(4)};
  d.kind = SubalgebraKind::split_dim2;
  d.e_plus = basis<Scalar>(-4);
  return d;
}

std::optional<Scalar> monomial_sqrt(const Scalar& x) {
  if (!x.has_context()) {
    if (!rational_square(x)) return std::nullopt;
    auto r = [](std::int64_t n) { return static_cast<std::int64_t>(std::llround(std::sqrt(double(n)))); };
    return Scalar::rational(r(x.const_num()), r(x.const_den()));
  }
  if (x.is_zero()) return x;
  if (!x.is_exact() || x.coeffs().size() != 1 || x.val() % 2 != 0) return std::nullopt;
  const FieldContext* ctx = x.context();
  Residue c = x.leading();
  if (c.b != 0) return std::nullopt;
  for (std::uint32_t r = 0; r < static_cast<std::uint32_t>(ctx->p()); ++r)
    if (ctx->rmul({r, 0}, {r, 0}) == c) return ctx->monomial({r, 0}, x.val() / 2);
  return std::nullopt;
}

int hilbert_symbol(const Scalar& a0, const Scalar& b0) {
  if (a0.is_zero() || b0.is_zero()) throw DomainError("Hilbert symbol of zero");
  if ((!a0.has_context() && rational_square(a0)) || (!b0.has_context() && rational_square(b0))) return 1;
  const FieldContext* ctx = a0.context() ? a0.context() : b0.context();
  if (!ctx) throw UnsupportedError("Hilbert symbol of context-free constants");
  Scalar a = ctx->adopt(a0), b = ctx->adopt(b0);
  std::int64_t al = a.val(), be = b.val();
  auto rpow = [&](Residue r, std::int64_t e) {
    if (e < 0) {
      r = ctx->rinv(r);
      e = -e;
    }
    Residue out{1, 0};
    while (e) {
      if (e & 1) out = ctx->rmul(out, r);
      r = ctx->rmul(r, r);
      e >>= 1;
    }
    return out;
  };
  Residue u = ctx->rmul(rpow(a.leading(), be), rpow(b.leading(), -al));
  if ((al * be) % 2 != 0) u = ctx->rneg(u);
  return ctx->rsquare(u) ? 1 : -1;
}

std::vector<Octonion> orthogonal_basis(const std::vector<Octonion>& vs) {
  SubspaceV s = SubspaceV::span(vs);
  std::vector<Octonion> rest = s.vectors();
  std::vector<Octonion> out;
  while (!rest.empty()) {
    int pick = -1;
    Octonion v;
    for (std::size_t k = 0; k < rest.size() && pick < 0; ++k)
      if (!norm_q(rest[k]).is_zero()) {
        pick = static_cast<int>(k);
        v = rest[k];
      }
    if (pick < 0) {
      for (std::size_t k = 0; k < rest.size() && pick < 0; ++k)
        for (std::size_t l = k + 1; l < rest.size() && pick < 0; ++l)
          if (!bilinear_f(rest[k], rest[l]).is_zero()) {
            pick = static_cast<int>(k);
            rest[k] = rest[k] + rest[l];
            v = rest[k];
          }
    }
    if (pick < 0) throw DegeneracyError("f is degenerate on the span");
    rest.erase(rest.begin() + pick);
    Scalar two_q = Scalar(2) * norm_q(v);
    for (auto& w : rest) w = w - v * (bilinear_f(w, v) / two_q);
    out.push_back(v);
  }
  return out;
}

SubalgebraKind detect_kind(const std::vector<Octonion>& b) {
  SubspaceV s = SubspaceV::span(b);
  const FieldContext* ctx = context_of(b);
  Octonion one = unit<Scalar>();
  std::vector<Octonion> perp;
  for (const auto& v : s.vectors()) perp.push_back(v - one * (trace(v) * half()));
  switch (s.dim()) {
    case 1: return SubalgebraKind::center;
    case 2: {
      SubspaceV p = SubspaceV::span(perp);
      if (p.dim() != 1) throw DomainError("dimension-2 span does not contain 1");
      Scalar d = -norm_q(p.vector(0));
      return square_in(d, ctx) ? SubalgebraKind::split_dim2 : SubalgebraKind::field_dim2;
    }
    case 4: {
      auto ob = orthogonal_basis(perp);
      if (ob.size() != 3) throw DomainError("dimension-4 span does not contain 1");
      Scalar d1 = -norm_q(ob[0]), d2 = -norm_q(ob[1]);
      if (ctx) {
        d1 = ctx->adopt(d1);
        d2 = ctx->adopt(d2);
      }
      return hilbert_symbol(d1, d2) == 1 ? SubalgebraKind::split_dim4 : SubalgebraKind::division_dim4;
    }
    case 8: return SubalgebraKind::full;
    default: throw DomainError("composition subalgebras have dimension 1, 2, 4 or 8");
  }
}

bool is_composition(const std::vector<Octonion>& b) {
  SubspaceV s = SubspaceV::span(b);
  if (!s.contains(unit<Scalar>())) return false;
  auto vs = s.vectors();
  for (const auto& x : vs)
    for (const auto& y : vs)
      if (!s.contains(mul(x, y))) return false;
  MatX<Scalar> g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = bilinear_f(vs[i], vs[j]);
  return !det<Scalar>(g).is_zero();
}

CompositionSubalgebra double_algebra(const CompositionSubalgebra& d, const Octonion& a) {
  if (d.dim() >= 8) throw InvalidDoublingError("cannot double the full algebra");
  for (const auto& b : d.basis)
    if (!bilinear_f(a, b).is_zero()) throw InvalidDoublingError("a is not orthogonal to D");
  Scalar qa = norm_q(a);
  if (qa.is_zero()) throw InvalidDoublingError("a is isotropic");
  // (x + ya)(u + va) = (xu − Q(a) v̄ y) + (vx + y ū)a on basis pairs.
  for (const auto& x : d.basis)
    for (const auto& y : d.basis) {
      if (mul(x, mul(y, a)) != mul(mul(y, x), a) || mul(mul(x, a), y) != mul(mul(x, conj(y)), a) ||
          mul(mul(x, a), mul(y, a)) != -mul(conj(y), x) * qa)
        throw InvalidDoublingError("doubling formula violated; D is not an associative composition subalgebra");
    }
  CompositionSubalgebra out;
  out.basis = d.basis;
  for (const auto& b : d.basis) out.basis.push_back(mul(b, a));
  out.kind = detect_kind(out.basis);
  if (out.kind == SubalgebraKind::split_dim2) {
    // a² = −Q(a)𝟙; with −Q(a) = δ², e⁺ = ½(𝟙 + a/δ).
    if (auto delta = monomial_sqrt(-qa)) out.e_plus = (unit<Scalar>() + a / *delta) * half();
  }
  return out;
}

Idempotents idempotents_from_isotropic_pair(const Octonion& h, const Octonion& hp) {
  Octonion one = unit<Scalar>();
  if (!norm_q(h).is_zero() || !norm_q(hp).is_zero()) throw InvalidPairError("h and h' must be isotropic");
  if (!bilinear_f(h, one).is_zero() || !bilinear_f(hp, one).is_zero())
    throw InvalidPairError("h and h' must be orthogonal to 1");
  if (bilinear_f(h, hp) != Scalar(1)) throw InvalidPairError("f(h, h') must equal 1");
  Idempotents r;
  r.e_plus = -mul(h, hp);
  r.e_minus = -mul(hp, h);
  r.c = r.e_plus - r.e_minus;
  return r;
}

Polarization split_polarization(const CompositionSubalgebra& d) {
  if (d.kind != SubalgebraKind::split_dim2) throw WrongKindError("split_polarization needs a split dimension-2 D");
  if (!d.e_plus) throw InvalidWitnessError("idempotent witness e+ required");
  const Octonion one = unit<Scalar>();
  const Octonion& ep = *d.e_plus;
  SubspaceV ds = d.space();
  if (!ds.contains(ep) || mul(ep, ep) != ep || mat_is_zero<Scalar>(ep) || ep == one)
    throw InvalidWitnessError("e+ is not a nontrivial idempotent of D");
  Polarization pol;
  pol.e_plus = ep;
  pol.e_minus = one - ep;
  SubspaceV w = ds.orthogonal();
  std::vector<Octonion> plus, minus;
  for (const auto& v : w.vectors()) {
    plus.push_back(mul(pol.e_plus, v));
    minus.push_back(mul(pol.e_minus, v));
  }
  pol.w_plus = SubspaceV::span(plus);
  pol.w_minus = SubspaceV::span(minus);
  if (pol.w_plus.dim() != 3 || pol.w_minus.dim() != 3) throw DomainError("polarization is not 3 + 3");
  return pol;
}

}  // namespace g2kit
