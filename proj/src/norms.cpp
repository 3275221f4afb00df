#include "g2kit/norms.hpp"

#include <sstream>

#include "g2kit/endomorphisms.hpp"

namespace g2kit {

namespace {

MatX<Scalar> columns(const std::vector<Octonion>& vs) {
  MatX<Scalar> m(8, vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(k) = vs[k];
  return m;
}

// Valuation normalized by v(π) = 1 for the uniformizer π of the current model.
Rational nval(const Scalar& x) { return Rational(x.val()); }
Rational half_val(const Scalar& x) { return nval(x) / 2; }

bool ge(const NormValue& a, const NormValue& b) {
  if (!a) return true;
  if (!b) return false;
  return *a >= *b;
}

NormValue add(const NormValue& a, const NormValue& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

/// Dual basis of bs inside span(bs): f(b*_i, b_j) = δ_ij.
std::vector<Octonion> dual_basis(const std::vector<Octonion>& bs) {
  MatX<Scalar> b = columns(bs);
  MatX<Scalar> gb = b.transpose() * gram_matrix<Scalar>() * b;
  if (rank<Scalar>(gb) < gb.rows()) throw DegeneracyError("f is degenerate on the span of the splitting basis");
  MatX<Scalar> d = b * invert<Scalar>(gb);
  std::vector<Octonion> out;
  for (int k = 0; k < d.cols(); ++k) out.push_back(d.col(k));
  return out;
}

}  // namespace

NormFn wedge(const NormFn& a, const NormFn& b) {
  NormFn out = a;
  out.basis.insert(out.basis.end(), b.basis.begin(), b.basis.end());
  out.values.insert(out.values.end(), b.values.begin(), b.values.end());
  if (rank<Scalar>(columns(out.basis)) != out.dim()) throw DomainError("wedge needs independent splitting bases");
  return out;
}

NormFn translate(const NormFn& a, const Rational& r) {
  NormFn out = a;
  for (auto& v : out.values) v += r;
  return out;
}

NormFn standard_norm(const std::array<Rational, 8>& values_by_position) {
  NormFn out;
  for (int p = 0; p < 8; ++p) {
    out.basis.push_back(basis<Scalar>(label(p)));
    out.values.push_back(values_by_position[p]);
  }
  return out;
}

NormValue eval(const NormFn& a, const Octonion& x) {
  if (a.basis.size() != a.values.size()) throw DomainError("norm needs one value per basis vector");
  auto sol = solve<Scalar>(columns(a.basis), x);
  if (!sol) throw DomainError("vector outside the span of the splitting basis");
  NormValue best;
  for (int k = 0; k < a.dim(); ++k) {
    const Scalar& xi = (*sol)(k, 0);
    if (xi.is_zero()) continue;
    Rational v = nval(xi) + a.values[k];
    if (!best || v < *best) best = v;
  }
  return best;
}

bool norm_equal(const NormFn& a, const NormFn& b) {
  if (!(a.space() == b.space())) return false;
  for (int k = 0; k < b.dim(); ++k)
    if (eval(a, b.basis[k]) != NormValue(b.values[k])) return false;
  for (int k = 0; k < a.dim(); ++k)
    if (eval(b, a.basis[k]) != NormValue(a.values[k])) return false;
  return true;
}

NormFn dual_norm(const NormFn& a) {
  NormFn out;
  out.basis = dual_basis(a.basis);
  for (const auto& v : a.values) out.values.push_back(-v);
  return out;
}

bool is_self_dual(const NormFn& a) { return norm_equal(a, dual_norm(a)); }

NormFn sharp_dual(const NormFn& a_plus, const Polarization& pol) {
  if (a_plus.dim() != 3 || !pol.w_plus.contains(SubspaceV::span(a_plus.basis)))
    throw DomainError("α⁺ must be split by a basis of W⁺");
  MatX<Scalar> wm = pol.w_minus.basis();
  MatX<Scalar> pairing = wm.transpose() * gram_matrix<Scalar>() * columns(a_plus.basis);
  if (rank<Scalar>(pairing) < 3) throw DegeneracyError("W⁺ and W⁻ are not in duality");
  MatX<Scalar> d = wm * invert<Scalar>(pairing).transpose();
  NormFn out;
  for (int k = 0; k < 3; ++k) {
    out.basis.push_back(d.col(k));
    out.values.push_back(-a_plus.values[k]);
  }
  return out;
}

AlgebraNormReport algebra_norm_report(const NormFn& a) {
  if (a.dim() != 8) throw DomainError("algebra norms live on all of V");
  AlgebraNormReport r;
  r.products = true;
  for (int i = 0; i < 8 && r.products; ++i)
    for (int j = 0; j < 8; ++j)
      if (!ge(eval(a, mul(a.basis[i], a.basis[j])), NormValue(a.values[i] + a.values[j]))) {
        r.products = false;
        break;
      }
  r.unit_zero = eval(a, unit<Scalar>()) == NormValue(Rational(0));
  r.conj_invariant = true;
  for (int i = 0; i < 8; ++i)
    if (eval(a, g2kit::conj(a.basis[i])) != NormValue(a.values[i])) r.conj_invariant = false;
  return r;
}

bool is_algebra_norm(const NormFn& a) { return algebra_norm_report(a).ok(); }

bool minorant_pair(const NormFn& a, const Octonion& x, const Octonion& y) {
  Scalar fxy = bilinear_f(x, y);
  if (fxy.is_zero()) return true;
  NormValue s = add(eval(a, x), eval(a, y));
  return !s || *s <= nval(fxy);
}

std::array<Octonion, 3> special_basis(const Polarization& pol) {
  NormFn zero{pol.w_plus.vectors(), {Rational(0), Rational(0), Rational(0)}};
  NormFn dual = sharp_dual(zero, pol);
  return {zero.basis[0], zero.basis[1], mul(dual.basis[0], dual.basis[1])};
}

Rational volume(const NormFn& a_plus, const Polarization& pol) {
  if (a_plus.dim() != 3) throw DomainError("volume needs a norm on W⁺");
  auto s = special_basis(pol);
  auto g = solve<Scalar>(columns({s[0], s[1], s[2]}), columns(a_plus.basis));
  if (!g) throw DomainError("α⁺ must be split by a basis of W⁺");
  Scalar dg = det<Scalar>(*g);
  if (dg.is_zero()) throw DegeneracyError("splitting basis is not a basis of W⁺");
  Rational vol = nval(dg);
  for (const auto& v : a_plus.values) vol -= v;
  return vol;
}

NormFn extend_sl3(const NormFn& a_plus, const CompositionSubalgebra& d) {
  Polarization pol = split_polarization(d);
  Rational vol = volume(a_plus, pol);
  if (vol != Rational(0)) throw VolumeError("α⁺ has volume " + to_string(vol) + ", expected 0");
  NormFn a0{{pol.e_plus, pol.e_minus}, {Rational(0), Rational(0)}};
  return wedge(wedge(a0, a_plus), sharp_dual(a_plus, pol));
}

NormFn rescale_to_f(const HermitianNormFn& a) {
  Rational vc = half_val(norm_q(a.c));
  NormFn out;
  for (int k = 0; k < 3; ++k) {
    Rational v = a.values[k] / a.e;
    out.basis.push_back(a.basis[k]);
    out.values.push_back(v);
    out.basis.push_back(mul(a.c, a.basis[k]));
    out.values.push_back(v + vc);
  }
  return out;
}

NormFn extend_su21(const HermitianNormFn& a) {
  NormFn g = rescale_to_f(a);
  if (!is_self_dual(g)) throw DualityError("(1/e)α' is not self-dual");
  NormFn a0{{unit<Scalar>(), a.c}, {Rational(0), half_val(norm_q(a.c))}};
  return wedge(a0, g);
}

NormFn half_valuation_norm(const std::vector<Octonion>& span) {
  NormFn out;
  for (const auto& b : orthogonal_basis(span)) {
    out.basis.push_back(b);
    out.values.push_back(half_val(norm_q(b)));
  }
  return out;
}

NormFn extend_dim4(const NormFn& a_w, const CompositionSubalgebra& d) {
  if (d.dim() != 4) throw DomainError("extend_dim4 needs a dimension-4 subalgebra");
  SubspaceV w = d.space().orthogonal();
  if (a_w.dim() != 4 || !(a_w.space() == w)) throw DomainError("α_W must be split by a basis of D^⊥");
  if (!is_self_dual(a_w)) throw DualityError("α_W is not self-dual");
  if (d.kind == SubalgebraKind::division_dim4) return wedge(half_valuation_norm(d.basis), a_w);
  if (d.kind != SubalgebraKind::split_dim4) throw WrongKindError("extend_dim4 needs a split or division quaternion algebra");

  Octonion h = a_w.basis[0], hp = a_w.basis[1], k = a_w.basis[2], kp = a_w.basis[3];
  Rational ah = a_w.values[0], ak = a_w.values[2];
  for (const Octonion* x : {&h, &hp, &k, &kp})
    if (!norm_q(*x).is_zero()) throw DomainError("α_W must be given on a Witt basis (h, h', k, k')");
  if (bilinear_f(h, hp) != Scalar(1) || bilinear_f(k, kp) != Scalar(1) || !bilinear_f(h, k).is_zero() ||
      !bilinear_f(h, kp).is_zero() || !bilinear_f(hp, k).is_zero() || !bilinear_f(hp, kp).is_zero())
    throw DomainError("α_W must be given on a Witt basis (h, h', k, k')");
  Octonion ep = -mul(h, hp), em = -mul(hp, h);
  Octonion hm = h - hp;
  Octonion b = mul(Octonion(k + kp), hm);
  if (mul(mul(ep, b), hm) != kp) {
    std::swap(k, kp);
    ak = a_w.values[3];
    b = mul(Octonion(k + kp), hm);
  }
  if (mul(mul(ep, b), hm) != kp) throw std::logic_error("(e⁺b)(h − h') must equal k'");
  Rational v = -ah - ak;
  NormFn a0{{ep, em, mul(ep, b), mul(em, b)}, {Rational(0), Rational(0), v, -v}};
  return wedge(a0, a_w);
}

NormFn restriction(const NormFn& a, const SubspaceV& s) {
  NormFn out;
  for (int k = 0; k < a.dim(); ++k)
    if (s.contains(a.basis[k])) {
      out.basis.push_back(a.basis[k]);
      out.values.push_back(a.values[k]);
    }
  if (out.dim() != s.dim()) throw DomainError("subspace is not spanned by part of the splitting basis");
  return out;
}

bool triality_exponent_identities(const NormFn& a) {
  auto at = [&](int i) { return eval(a, basis<Scalar>(i)); };
  if (at(4) != NormValue(Rational(0)) || at(-4) != NormValue(Rational(0))) return false;
  NormValue s = add(add(at(1), at(2)), at(3));
  if (s != NormValue(Rational(0))) return false;
  for (int i = 1; i <= 3; ++i)
    if (add(at(i), at(-i)) != NormValue(Rational(0))) return false;
  return true;
}

std::vector<std::int64_t> LatticeSeq::exponents(int i) const {
  std::vector<std::int64_t> out;
  for (const auto& v : values) out.push_back(ceil(Rational(i, m) - v));
  return out;
}

std::string LatticeSeq::jump_table() const {
  std::ostringstream os;
  for (int i = 0; i < m; ++i) {
    os << i << " ↦ (";
    auto e = exponents(i);
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? ", " : "") << e[k];
    os << ")\n";
  }
  return os.str();
}

bool lattice_contains(const Lattice& big, const Lattice& small) {
  auto c = solve<Scalar>(columns(big.basis), columns(small.basis));
  if (!c) return false;
  for (int col = 0; col < c->cols(); ++col)
    for (int row = 0; row < c->rows(); ++row) {
      const Scalar& x = (*c)(row, col);
      if (!x.is_zero() && x.val() + small.exps[col] < big.exps[row]) return false;
    }
  return true;
}

bool lattice_equal(const Lattice& a, const Lattice& b) { return lattice_contains(a, b) && lattice_contains(b, a); }

Lattice lattice_at(const LatticeSeq& s, int i) { return {s.basis, s.exponents(i)}; }

Lattice dual_lattice(const Lattice& l) {
  Lattice out{dual_basis(l.basis), {}};
  for (auto e : l.exps) out.exps.push_back(1 - e);
  return out;
}

LatticeSeq lattice_seq_from_norm(const NormFn& a) {
  LatticeSeq s;
  s.basis = a.basis;
  s.values = a.values;
  std::int64_t m = 1;
  for (const auto& v : a.values) m = lcm_den(m, v);
  s.m = static_cast<int>(m);
  Lattice d0;
  try {
    d0 = dual_lattice(lattice_at(s, 0));
  } catch (const DegeneracyError&) {
    return s;
  }
  for (int d = -16 * s.m; d <= 16 * s.m; ++d) {
    if (!lattice_equal(d0, lattice_at(s, d))) continue;
    bool all = true;
    for (int i = 1; i < s.m && all; ++i) all = lattice_equal(dual_lattice(lattice_at(s, i)), lattice_at(s, d - i));
    if (all) s.dual_invariant = d;
    break;
  }
  return s;
}

bool FiltrationLattice::contains(const EndV& x) const {
  MatX<Scalar> y = to_basis * x * columns(basis);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      if (!y(r, c).is_zero() && y(r, c).val() < bounds(r, c)) return false;
  return true;
}

FiltrationLattice filtration_lattice(const LatticeSeq& s, int k) {
  if (s.basis.size() != 8) throw DomainError("filtration lattices need a splitting basis of V");
  FiltrationLattice out;
  out.k = k;
  out.m = s.m;
  out.basis = s.basis;
  out.to_basis = invert<Scalar>(columns(s.basis));
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) out.bounds(r, c) = ceil(Rational(k, s.m) + s.values[c] - s.values[r]);
  return out;
}

std::vector<EndV> filtration_generators(const LatticeSeq& s, int k, const FieldContext* ctx) {
  std::array<Rational, 8> alpha{};
  std::array<bool, 8> seen{};
  if (s.basis.size() != 8) throw DomainError("filtration generators need a splitting basis of V");
  for (std::size_t b = 0; b < 8; ++b) {
    int found = -1;
    for (int p = 0; p < 8; ++p)
      if (s.basis[b] == basis<Scalar>(label(p))) found = p;
    if (found < 0 || seen[found]) throw DomainError("filtration generators need the standard splitting basis");
    seen[found] = true;
    alpha[found] = s.values[b];
  }
  auto a = [&](int i) { return alpha[pos(i)]; };
  Rational km(k, s.m);
  std::vector<EndV> out;
  for (int i = 1; i <= 4; ++i) out.push_back(D_i(i, ctx->monomial(1, ceil(km))));
  for (int i : kBasisOrder)
    for (int j : kBasisOrder)
      if (i < j && i != -j) out.push_back(U_ij(i, j, ctx->monomial(1, ceil(km + a(i) + a(j)))));
  return out;
}

}  // namespace g2kit
