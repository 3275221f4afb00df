#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2kit/endomorphisms.hpp"

namespace g2kit {

/// (t₁, t₂, t₃) with t₁(xy) = t₂(x)t₃(y) (group), or t₁(xy) = t₂(x)y + xt₃(y) (Lie).
struct TrialityTriple {
  EndV t1, t2, t3;
  bool lie = false;
};

/// t̂(x) = conj(t(conj(x))).
EndV hat(const EndV& t);

bool check_related(const EndV& t1, const EndV& t2, const EndV& t3, bool lie);
inline bool check_related(const TrialityTriple& t) { return check_related(t.t1, t.t2, t.t3, t.lie); }

/// (t̂₂, t₃, t̂₁), the order-3 generator.
TrialityTriple rotate(const TrialityTriple& t);
/// (t₂, t₁, t̂₃), the order-2 generator.
TrialityTriple swap(const TrialityTriple& t);
/// T followed by (t₂,t₁,t̂₃), (t₃,t̂₂,t₁), (t̂₁,t̂₃,t̂₂), (t̂₂,t₃,t̂₁), (t̂₃,t̂₁,t₂); raises InvalidTripleError unless T is related.
std::vector<TrialityTriple> orbit_triples(const TrialityTriple& t);

/// For (i, i⁺, i⁺⁺) cyclic starting at i ∈ {1,2,3}:
/// pattern 0: (u_{−i,−i⁺⁺}(λ), u_{i⁺,4}(λ), u_{−4,i⁺}(λ)); pattern 1: (u_{i,i⁺⁺}(λ), u_{−i⁺,−4}(λ), u_{4,−i⁺}(λ)).
/// With lie = true the U_{i,j} are used instead.
TrialityTriple root_triple(int i, int pattern, const Scalar& lambda, bool lie = false);
/// (u, u, u) for u = u_{i,j}(λ) with i, j of opposite sign and ≠ ±4.
TrialityTriple fixed_root_triple(int i, int j, const Scalar& lambda, bool lie = false);
/// The diagonal Lie triples through D_i(s), 1 ≤ i ≤ 4.
TrialityTriple diag_lie_triple(int i, const Scalar& s);

/// (ι(u,g), ι(λ⁻¹u, λ⁻¹g), ι(λ, uλ⁻¹g)) with the witness λ² = u·det g verified.
TrialityTriple solve_glw(const Scalar& u, const Mat3& g, const Scalar& lambda);

/// t(x + ya) = αuxu⁻¹ + (δvyv⁻¹)a on V = V⁰ ⊥ V⁰a, dim V⁰ = 4.
struct Dim4Data {
  CompositionSubalgebra v0;
  Octonion a;
  Octonion alpha, u, delta, v;
};
EndV dim4_map(const Dim4Data& d);
/// Related triple through dim4_map(d) for a witness ξ with ξ² = Q(u/v).
TrialityTriple solve_dim4(const Dim4Data& d, const Scalar& xi);

/// t(v₀ + w) = λv₀ + gw on V = D ⊥ W, D = F[c], g D-linear in the D-basis w of W.
struct Dim2Data {
  Octonion c;
  std::array<Octonion, 3> w;
  Octonion lambda;
  MatD3 g;
};
EndV dim2_map(const Octonion& c, const std::array<Octonion, 3>& w, const Octonion& lambda, const MatD3& g);
/// Determinant over D of a 3×3 matrix with entries in the commutative D.
Octonion det_d(const MatD3& g);
/// Related triple through dim2_map for ξ ∈ D with Q(ξ) = 1 and ξ² = λ·conj(det_D g).
TrialityTriple solve_dim2(const Dim2Data& d, const Octonion& xi);

/// w ∧̄ w' for a Φ-orthogonal D-basis {a, b, ab} of W, normalized by a∧b∧ab = Q(ab).
Octonion barwedge(const Octonion& c, const Octonion& a, const Octonion& b, const Octonion& w, const Octonion& wp);

bool is_g2_element(const EndV& g);
bool is_g2_lie(const EndV& x);

/// so(V) generator family: the four D_i and the 24 U_{i,j}, each with its Lie triple at parameter 1.
enum class GeneratorFamily { diagonal, root, fixed };
struct LieGenerator {
  std::string name;
  EndV x;
  TrialityTriple triple;
  int row, col;  ///< probe entry that isolates the generator's coefficient
  GeneratorFamily family;
  int a, b;       ///< diagonal: (i, 0); root: (i, pattern); fixed: (i, j)
  int orbit = 0;  ///< root: position of x in orbit_triples(root_triple(a, b))
};
/// Lie and group triples through the generator at parameter λ (group: D_i(λ) ↦ d_i(C(λ)) through solve_glw, needs sqrt_c² = C(λ)).
TrialityTriple generator_lie_triple(const LieGenerator& g, const Scalar& lambda);
TrialityTriple generator_group_triple(const LieGenerator& g, const Scalar& lambda, const std::optional<Scalar>& sqrt_c = std::nullopt);
const std::vector<LieGenerator>& lie_generators();
/// Related Lie triple of X ∈ so(V), by linearity over the generator family.
TrialityTriple solve_lie(const EndV& x);
/// A basis of 𝔤₂ inside the generator span.
std::vector<EndV> g2_generators();

}  // namespace g2kit
