#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2kit/octonion.hpp"
#include "g2kit/rational.hpp"

namespace g2kit {

/// α(x) with nullopt standing for +∞.
using NormValue = std::optional<Rational>;

/// Norm on span(basis), split by that basis: α(Σξᵢbᵢ) = min(v_F(ξᵢ) + α(bᵢ)).
struct NormFn {
  std::vector<Octonion> basis;
  std::vector<Rational> values;

  int dim() const { return static_cast<int>(basis.size()); }
  SubspaceV space() const { return SubspaceV::span(basis); }
};

/// Direct sum α₁ ∧ α₂ (the bases must be jointly independent).
NormFn wedge(const NormFn& a, const NormFn& b);
/// α + r.
NormFn translate(const NormFn& a, const Rational& r);
/// Norm split by the standard basis with α(e_i) = values[i] for i = label(position).
NormFn standard_norm(const std::array<Rational, 8>& values_by_position);

NormValue eval(const NormFn& a, const Octonion& x);
/// α ≤ β and β ≤ α, checked on both splitting bases.
bool norm_equal(const NormFn& a, const NormFn& b);

/// Dual of α with respect to f restricted to span(α.basis); DegeneracyError if f is degenerate there.
NormFn dual_norm(const NormFn& a);
bool is_self_dual(const NormFn& a);
/// (α⁺)♯ on W⁻ = the f-dual of W⁺ inside the polarization.
NormFn sharp_dual(const NormFn& a_plus, const Polarization& pol);

struct AlgebraNormReport {
  bool products = false;   ///< α(bᵢbⱼ) ≥ α(bᵢ) + α(bⱼ) on the splitting basis
  bool unit_zero = false;  ///< α(𝟙) = 0
  bool conj_invariant = false;
  bool ok() const { return products && unit_zero && conj_invariant; }
};
AlgebraNormReport algebra_norm_report(const NormFn& a);
bool is_algebra_norm(const NormFn& a);

/// α(x) + α(y) ≤ v_F(f(x, y)).
bool minorant_pair(const NormFn& a, const Octonion& x, const Octonion& y);

/// Special basis (f₁⁺, f₂⁺, f₁⁻f₂⁻) of W⁺ built from the normal-form basis of W⁺.
std::array<Octonion, 3> special_basis(const Polarization& pol);
/// vol α⁺ normalized so that lattices of special bases have volume 0.
Rational volume(const NormFn& a_plus, const Polarization& pol);

/// α₀ ∧ α⁺ ∧ (α⁺)♯ for a volume-zero α⁺ on W⁺_D; VolumeError otherwise.
NormFn extend_sl3(const NormFn& a_plus, const CompositionSubalgebra& d);

/// F'-norm on W given on a D-basis w with values in v_{F'} units.
struct HermitianNormFn {
  Octonion c;  ///< generator of D = F' = F[c]
  std::array<Octonion, 3> basis;
  std::array<Rational, 3> values;
  int e = 1;   ///< ramification index of F'/F
};
/// The F-norm (1/e)α' split by {b, cb}.
NormFn rescale_to_f(const HermitianNormFn& a);
/// α₀ ∧ (1/e)α' with α₀ = ½v_F∘Q on D; DualityError unless (1/e)α' is self-dual.
NormFn extend_su21(const HermitianNormFn& a);
/// The unique self-dual algebra norm α₀ ∧ α_W for dim D = 4. A split D needs α_W on a Witt basis
/// (h, h', k, k'); an anisotropic D needs α_W = ½v_F∘Q. DualityError if α_W is not self-dual.
NormFn extend_dim4(const NormFn& a_w, const CompositionSubalgebra& d);
/// ½v_F∘Q on a composition subalgebra or its orthogonal, split by an orthogonal basis.
NormFn half_valuation_norm(const std::vector<Octonion>& span);

/// Restriction of α to the span of a subset of its splitting basis; DomainError otherwise.
NormFn restriction(const NormFn& a, const SubspaceV& s);

/// α(e₄) = α(e₋₄) = 0, α(e₁)+α(e₂)+α(e₃) = 0, α(eᵢ)+α(e₋ᵢ) = 0 on a norm split by the standard basis.
bool triality_exponent_identities(const NormFn& a);

/// Λ(i) = λ_α(i/m) = ⊕ 𝔭^{⌈i/m − α(bₖ)⌉} bₖ.
struct LatticeSeq {
  int m = 1;
  std::vector<Octonion> basis;
  std::vector<Rational> values;
  std::optional<int> dual_invariant;  ///< d with Λ(i)* = Λ(d − i), when one exists

  std::vector<std::int64_t> exponents(int i) const;
  std::string jump_table() const;
};
/// A lattice ⊕ 𝔭^{exps[k]} basis[k].
struct Lattice {
  std::vector<Octonion> basis;
  std::vector<std::int64_t> exps;
};
bool lattice_contains(const Lattice& big, const Lattice& small);
bool lattice_equal(const Lattice& a, const Lattice& b);
Lattice lattice_at(const LatticeSeq& s, int i);
/// L* = {x : f(x, L) ⊆ 𝔭_F}.
Lattice dual_lattice(const Lattice& l);

LatticeSeq lattice_seq_from_norm(const NormFn& a);

/// 𝔄_k(Λ) = {X : XΛ(i) ⊆ Λ(i+k)} as valuation bounds on the entries of X in the splitting basis.
struct FiltrationLattice {
  int k = 0;
  int m = 1;
  std::vector<Octonion> basis;
  MatX<Scalar> to_basis;                       ///< B⁻¹
  Eigen::Matrix<std::int64_t, 8, 8> bounds;    ///< entry (r, c) needs v ≥ bounds(r, c)
  /// X lies in the lattice (X need not be in so(V)).
  bool contains(const EndV& x) const;
};
FiltrationLattice filtration_lattice(const LatticeSeq& s, int k);
/// 𝔄_k ∩ so(V) generators D_i(t^{⌈k/m⌉}) and U_{i,j}(t^{⌈k/m+α(e_i)+α(e_j)⌉}); requires the standard splitting basis.
std::vector<EndV> filtration_generators(const LatticeSeq& s, int k, const FieldContext* ctx);

}  // namespace g2kit
