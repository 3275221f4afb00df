#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2kit/norms.hpp"
#include "g2kit/triality.hpp"

namespace g2kit {

/// C(X) = (1 + X/2)(1 − X/2)⁻¹; SingularityError if 1 − X/2 is not invertible.
EndV cayley(const EndV& x);
/// C⁻¹(g) = 2(g − 1)(g + 1)⁻¹.
EndV cayley_inv(const EndV& g);
/// C(λ) = (1 + λ/2)(1 − λ/2)⁻¹ for a scalar.
Scalar cayley_scalar(const Scalar& lambda);

/// X = lift of diag(u, u, −2u) ∈ 𝔤₂ whose Cayley transform leaves G₂; PreconditionError unless v(u) ≥ 1,
/// PrecisionError when 3v(u) is not below the precision.
bool moy_counterexample(const Scalar& u);

/// Result of a generator sweep: one entry per violated congruence.
struct CheckReport {
  std::string check;
  std::map<std::string, std::string> parameters;
  int generators_tested = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// A generator of 𝔄_k(Λ) ∩ so(V) at its minimal parameter, with its Lie and group triples.
struct FiltrationGenerator {
  const LieGenerator* gen;
  Scalar lambda;
  TrialityTriple lie;    ///< through gen at λ
  TrialityTriple group;  ///< through C(gen at λ)
};
/// All 28 generators of 𝔄_k(Λ) for a norm split by the standard basis, k ≥ 1.
std::vector<FiltrationGenerator> filtration_triples(const LatticeSeq& s, int k, const FieldContext* ctx);

/// Cayley homomorphism mod P^s, C(dν X) ≡ ν(C X) mod P^s, and lifting of Γ-fixed points; PreconditionError unless 1 ≤ r ≤ s ≤ 2r.
CheckReport quotient_iso_check(const LatticeSeq& s, int r, int s_, const FieldContext* ctx);

/// ψ(y) = residue-field trace of the π⁰-coefficient of y, an additive character trivial on 𝔭 and not on 𝔬.
std::uint32_t psi(const Scalar& y);
/// ψ∘tr(b(x − 1)); LatticeMembershipError unless b ∈ 𝔄_{1−s} and x − 1 ∈ 𝔄_r.
std::uint32_t psi_b(const LatticeSeq& s, int r, int s_, const EndV& b, const EndV& x);
/// Character identities of ψ_b: homomorphism on generator pairs, triviality for b ∈ 𝔄_{1−r},
/// non-triviality for b ∉ 𝔄_{1−r} on a spanning set, equivariance ψ_{dν(b)}(ν(x)) = ψ_b(x).
CheckReport psi_check(const LatticeSeq& s, int r, int s_, const FieldContext* ctx);

/// tr(XY) = tr(dν(X)dν(Y)) for the five non-trivial ν, with dν from solve_lie; UnsupportedError outside so(V).
bool trace_triality_invariance(const EndV& x, const EndV& y);

/// Finite symplectic space over F_p with an order-2 or order-3 isometry γ.
struct SymplecticSpace {
  int p = 5;
  std::vector<std::vector<std::int64_t>> form;   ///< alternating, non-degenerate
  std::vector<std::vector<std::int64_t>> gamma;  ///< preserves form
  int dim() const { return static_cast<int>(form.size()); }
};
struct GammaPerpReport {
  bool identity = false;       ///< (X^Γ)^⊥ ∩ V^Γ = (X^⊥)^Γ
  bool decomposition = false;  ///< V = V₁ ⊥ V_s
  int dim_fixed = 0;
  int dim_x_fixed = 0;
};
/// X is a list of spanning vectors; InvalidInputError on a bad space or a non-stable X.
GammaPerpReport gamma_perp(const SymplecticSpace& v, const std::vector<std::vector<std::int64_t>>& x);

/// Every γ-stable subspace of F_p^n, each as the rows of its reduced echelon basis.
std::vector<std::vector<std::vector<std::int64_t>>> gamma_stable_subspaces(const SymplecticSpace& v);

}  // namespace g2kit
