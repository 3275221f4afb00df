#include "g2kit/endomorphisms.hpp"

namespace g2kit {

namespace {

MatX<Scalar> columns(const std::vector<Octonion>& vs) {
  MatX<Scalar> m(8, vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(k) = vs[k];
  return m;
}

void check_index(int i) {
  if (i == 0 || i < -4 || i > 4) throw DomainError("Witt index must lie in {±1, ±2, ±3, ±4}");
}

bool is_idempotent_of(const Octonion& e, const SubspaceV& d) {
  return d.contains(e) && mul(e, e) == e && !mat_is_zero<Scalar>(e) && e != unit<Scalar>();
}

}  // namespace

EndV identity_end() { return EndV::Identity(); }
EndV zero_end() { return EndV::Zero(); }

EndV end_from_images(const std::vector<Octonion>& basis, const std::vector<Octonion>& images) {
  if (basis.size() != 8 || images.size() != 8) throw DomainError("end_from_images needs 8 vectors");
  MatX<Scalar> b = columns(basis), im = columns(images);
  return im * invert<Scalar>(b);
}

MatX<Scalar> restrict_to(const EndV& x, const SubspaceV& s) {
  MatX<Scalar> img = x * s.basis();
  auto sol = solve<Scalar>(s.basis(), img);
  if (!sol) throw DomainError("subspace is not stable");
  return *sol;
}

Scalar trace_end(const MatX<Scalar>& x) {
  Scalar s(0);
  for (int i = 0; i < x.rows(); ++i) s += x(i, i);
  return s;
}

EndV bracket(const EndV& x, const EndV& y) { return x * y - y * x; }

EndV adjoint(const EndV& x) {
  static const EndV g = gram_matrix<Scalar>();
  static const EndV ginv = invert<Scalar>(g);
  return ginv * x.transpose() * g;
}

bool is_so(const EndV& x) { return mat_is_zero<Scalar>(EndV(adjoint(x) + x)); }

bool is_isometry(const EndV& g) {
  static const EndV gram = gram_matrix<Scalar>();
  return mat_equal<Scalar>(EndV(g.transpose() * gram * g), gram);
}

bool is_derivation(const EndV& x) {
  for (int k = 0; k < 8; ++k) {
    Octonion ek = basis<Scalar>(label(k));
    Octonion xk = x.col(k);
    for (int l = 0; l < 8; ++l) {
      Octonion el = basis<Scalar>(label(l));
      Octonion lhs = x * mul(ek, el);
      Octonion rhs = mul(xk, el) + mul(ek, Octonion(x.col(l)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_automorphism(const EndV& g) {
  for (int k = 0; k < 8; ++k) {
    Octonion gk = g.col(k);
    for (int l = 0; l < 8; ++l) {
      Octonion lhs = g * mul(basis<Scalar>(label(k)), basis<Scalar>(label(l)));
      if (lhs != mul(gk, Octonion(g.col(l)))) return false;
    }
  }
  return true;
}

EndV u_ij(int i, int j, const Scalar& lambda) {
  check_index(i);
  check_index(j);
  if (i == j || i == -j) throw DomainError("u_{i,j} needs i ≠ ±j");
  EndV u = identity_end();
  u(pos(-j), pos(i)) += lambda;
  u(pos(-i), pos(j)) -= lambda;
  return u;
}

EndV U_ij(int i, int j, const Scalar& lambda) { return u_ij(i, j, lambda) - identity_end(); }

EndV d_i(int i, const Scalar& lambda) {
  if (i < 1 || i > 4) throw DomainError("d_i needs 1 ≤ i ≤ 4");
  EndV d = identity_end();
  d(pos(i), pos(i)) = lambda;
  d(pos(-i), pos(-i)) = lambda.inv();
  return d;
}

EndV D_i(int i, const Scalar& t) {
  if (i < 1 || i > 4) throw DomainError("D_i needs 1 ≤ i ≤ 4");
  EndV d = zero_end();
  d(pos(i), pos(i)) = t;
  d(pos(-i), pos(-i)) = -t;
  return d;
}

EndV iota(const Scalar& u, const Mat3& g) {
  Mat3 gi = invert<Scalar>(g);
  EndV m = zero_end();
  m(pos(-4), pos(-4)) = u.inv();
  m(pos(4), pos(4)) = u;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      m(pos(a + 1), pos(b + 1)) = g(a, b);
      m(pos(-(a + 1)), pos(-(b + 1))) = gi(b, a);
    }
  return m;
}

EndV lift_sl3(const Mat3& phi) {
  if (!trace_end(phi).is_zero()) throw InvalidLiftError("φ must be traceless");
  EndV m = zero_end();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      m(pos(a + 1), pos(b + 1)) = phi(a, b);
      m(pos(-(a + 1)), pos(-(b + 1))) = -phi(b, a);
    }
  return m;
}

EndV lift_sl3(const Mat3& phi, const Polarization& pol, const std::array<Octonion, 3>& wplus) {
  if (!trace_end(phi).is_zero()) throw InvalidLiftError("φ must be traceless");
  for (const auto& w : wplus)
    if (!pol.w_plus.contains(w)) throw InvalidLiftError("basis vector outside W+");
  auto wm = pol.w_minus.vectors();
  MatX<Scalar> pair(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) pair(i, j) = bilinear_f(wplus[i], wm[j]);
  MatX<Scalar> pinv = invert<Scalar>(pair);
  std::array<Octonion, 3> dual;
  for (int j = 0; j < 3; ++j) {
    dual[j] = Octonion::Zero();
    for (int k = 0; k < 3; ++k) dual[j] += wm[k] * pinv(k, j);
  }
  std::vector<Octonion> b = {pol.e_plus, pol.e_minus, wplus[0], wplus[1], wplus[2], dual[0], dual[1], dual[2]};
  std::vector<Octonion> im(8, Octonion::Zero());
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      im[2 + j] += wplus[i] * phi(i, j);
      im[5 + j] -= dual[i] * phi(j, i);
    }
  return end_from_images(b, im);
}

EndV lift_su21(const MatD3& phi, const Octonion& c, const std::array<Octonion, 3>& w) {
  Octonion tr = phi[0][0] + phi[1][1] + phi[2][2];
  if (!mat_is_zero<Scalar>(tr)) throw InvalidLiftError("φ must be traceless");
  SubspaceV d = SubspaceV::span({unit<Scalar>(), c});
  for (const auto& row : phi)
    for (const auto& x : row)
      if (!d.contains(x)) throw InvalidLiftError("entries of φ must lie in D");
  std::vector<Octonion> b = {unit<Scalar>(), c};
  std::vector<Octonion> im(2, Octonion::Zero());
  for (int l = 0; l < 3; ++l) {
    Octonion img = Octonion::Zero();
    for (int k = 0; k < 3; ++k) img += mul(phi[k][l], w[k]);
    b.push_back(w[l]);
    im.push_back(img);
    b.push_back(mul(c, w[l]));
    im.push_back(mul(c, img));
  }
  EndV x = end_from_images(b, im);
  if (!is_so(x)) throw InvalidLiftError("φ is not anti-hermitian");
  return x;
}

std::string to_string(SemisimpleCase c) {
  switch (c) {
    case SemisimpleCase::null: return "null";
    case SemisimpleCase::hyperbolic_plane: return "i-hyperbolic-plane";
    case SemisimpleCase::quadratic_extension: return "ii-quadratic-extension";
    case SemisimpleCase::dim4_split_eigen: return "iii-dim4-split-eigen";
    case SemisimpleCase::dim4_hermitian: return "iv-dim4-hermitian";
  }
  return "null";
}

void verify_witness(const EndV& beta, const DecompositionWitness& w) {
  if (w.factors.empty() || w.factors.size() != w.kernels.size())
    throw InvalidWitnessError("witness needs one kernel per factor");
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    const Poly& f = w.factors[i];
    if (f.degree() < 1) throw InvalidWitnessError("witness factors must be non-constant");
    if (Poly::gcd(f, f.derivative()).degree() > 0) throw InvalidWitnessError("witness factor is not squarefree");
    for (std::size_t j = i + 1; j < w.factors.size(); ++j)
      if (Poly::gcd(f, w.factors[j]).degree() > 0) throw InvalidWitnessError("witness factors are not coprime");
    MatX<Scalar> fb = f.eval(MatX<Scalar>(beta));
    if (!mat_is_zero<Scalar>(MatX<Scalar>(fb * w.kernels[i].basis())))
      throw InvalidWitnessError("factor does not annihilate its kernel");
  }
  MatX<Scalar> all(8, 0);
  for (const auto& k : w.kernels) {
    MatX<Scalar> next(8, all.cols() + k.dim());
    next << all, k.basis();
    all = next;
  }
  if (all.cols() != 8 || rank<Scalar>(all) != 8) throw InvalidWitnessError("kernels do not decompose V");
}

Octonion hermitian_form(const Octonion& c, const Octonion& x, const Octonion& y) {
  Octonion cinv = conj(c) / norm_q(c);
  return (unit<Scalar>() * bilinear_f(x, y) + cinv * bilinear_f(mul(c, x), y)) * Scalar::rational(1, 2);
}

SemisimpleAnalysis analyze_semisimple(const EndV& beta, const DecompositionWitness& wit) {
  if (!is_derivation(beta)) throw DomainError("β is not a derivation");
  verify_witness(beta, wit);
  SemisimpleAnalysis out;
  const Octonion one = unit<Scalar>();
  if (mat_is_zero<Scalar>(beta)) {
    out.tag = SemisimpleCase::null;
    out.v0.basis = SubspaceV::whole().vectors();
    out.v0.kind = SubalgebraKind::full;
    return out;
  }
  SubspaceV ker(kernel<Scalar>(beta));
  out.v0.basis = ker.vectors();
  if (!is_composition(out.v0.basis)) throw DomainError("ker β is not a composition subalgebra");
  out.v0.kind = detect_kind(out.v0.basis);
  out.w = ker.orthogonal();
  out.beta_w = restrict_to(beta, out.w);
  const FieldContext* ctx = context_of(beta);
  switch (ker.dim()) {
    case 2: {
      if (out.v0.kind == SubalgebraKind::split_dim2) {
        if (wit.e_plus) {
          if (!is_idempotent_of(*wit.e_plus, ker)) throw InvalidWitnessError("e+ is not an idempotent of V0");
          out.v0.e_plus = wit.e_plus;
        } else {
          Octonion a = Octonion::Zero();
          for (const auto& v : out.v0.basis)
            if (!SubspaceV::span({one}).contains(v)) a = v - one * (trace(v) * Scalar::rational(1, 2));
          auto delta = monomial_sqrt(-norm_q(a));
          if (!delta) throw InvalidWitnessError("idempotent witness e+ required");
          out.v0.e_plus = (one + a / *delta) * Scalar::rational(1, 2);
        }
        out.pol = split_polarization(out.v0);
        out.beta_wplus = restrict_to(beta, out.pol->w_plus);
        if (!trace_end(out.beta_wplus).is_zero()) throw DomainError("β restricted to W+ is not traceless");
        out.tag = SemisimpleCase::hyperbolic_plane;
      } else {
        if (!trace_end(out.beta_w).is_zero()) throw DomainError("β restricted to W is not traceless");
        out.tag = SemisimpleCase::quadratic_extension;
      }
      return out;
    }
    case 4: {
      MatX<Scalar> b2 = out.beta_w * out.beta_w;
      Scalar u = b2(0, 0);
      if (!mat_equal<Scalar>(b2, MatX<Scalar>(MatX<Scalar>::Identity(4, 4) * u)))
        throw DomainError("β_W² is not a scalar");
      if (u.is_zero()) throw DomainError("β_W² vanishes; β is not semisimple");
      if (ctx) u = ctx->adopt(u);
      out.u = u;
      out.minpoly_w = Poly({-u, Scalar(0), Scalar(1)});
      std::optional<Scalar> lambda;
      if (wit.sqrt_u) {
        if (*wit.sqrt_u * *wit.sqrt_u != u) throw InvalidWitnessError("λ² ≠ u");
        lambda = wit.sqrt_u;
      } else if (!u.has_context() || is_square(u)) {
        lambda = monomial_sqrt(u);
        if (!lambda && u.has_context()) throw InvalidWitnessError("u is a square; a square-root witness is required");
      }
      if (lambda) {
        out.lambda = lambda;
        out.w_lambda = SubspaceV(kernel<Scalar>(EndV(beta - identity_end() * *lambda)));
        out.w_minus_lambda = SubspaceV(kernel<Scalar>(EndV(beta + identity_end() * *lambda)));
        if (out.w_lambda.dim() != 2 || out.w_minus_lambda.dim() != 2)
          throw DomainError("eigenspaces of β_W are not of dimension 2");
        if (out.v0.kind != SubalgebraKind::split_dim4) throw DomainError("V0 is not split although β_W is split");
        out.tag = SemisimpleCase::dim4_split_eigen;
      } else {
        out.tag = SemisimpleCase::dim4_hermitian;
      }
      return out;
    }
    default:
      throw DomainError("ker β has dimension " + std::to_string(ker.dim()) + ", expected 2 or 4");
  }
}

}  // namespace g2kit
