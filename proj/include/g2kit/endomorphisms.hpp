#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2kit/octonion.hpp"
#include "g2kit/polynomial.hpp"

namespace g2kit {

using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
/// 3×3 matrix with entries in a dimension-2 subalgebra D, stored as octonions of D.
using MatD3 = std::array<std::array<Octonion, 3>, 3>;

EndV identity_end();
EndV zero_end();
/// Endomorphism sending the k-th vector of `basis` to images[k].
EndV end_from_images(const std::vector<Octonion>& basis, const std::vector<Octonion>& images);
/// Matrix of X restricted to S in the normal-form basis of S; S must be X-stable.
MatX<Scalar> restrict_to(const EndV& x, const SubspaceV& s);
Scalar trace_end(const MatX<Scalar>& x);
EndV bracket(const EndV& x, const EndV& y);

/// σ(X) = G⁻¹XᵀG, so that f(Xx, y) = f(x, σ(X)y).
EndV adjoint(const EndV& x);
bool is_so(const EndV& x);
bool is_isometry(const EndV& g);
/// X(e_k e_l) = X(e_k)e_l + e_k X(e_l) on all 64 basis pairs.
bool is_derivation(const EndV& x);
/// g(e_k e_l) = g(e_k) g(e_l) on all 64 basis pairs.
bool is_automorphism(const EndV& g);

/// u_{i,j}(λ): e_i ↦ e_i + λe_{−j}, e_j ↦ e_j − λe_{−i}; requires i ≠ ±j.
EndV u_ij(int i, int j, const Scalar& lambda);
/// U_{i,j}(λ) = u_{i,j}(λ) − 1.
EndV U_ij(int i, int j, const Scalar& lambda);
/// d_i(λ): e_i ↦ λe_i, e_{−i} ↦ λ⁻¹e_{−i}; 1 ≤ i ≤ 4.
EndV d_i(int i, const Scalar& lambda);
/// D_i(t): e_i ↦ te_i, e_{−i} ↦ −te_{−i}.
EndV D_i(int i, const Scalar& t);
/// ι(u, g): a ↦ u⁻¹a on e_{−4}, w ↦ gw on W⁺, φ ↦ φ∘g⁻¹ on W⁻, b ↦ ub on e_4.
EndV iota(const Scalar& u, const Mat3& g);

/// Lift of φ ∈ sl(W⁺) for D = span(e_{−4}, e_4): φ on (e_1, e_2, e_3), −φᵀ on the dual basis, 0 on D.
EndV lift_sl3(const Mat3& phi);
/// Same for a general split D, with φ written in the basis wplus of W⁺.
EndV lift_sl3(const Mat3& phi, const Polarization& pol, const std::array<Octonion, 3>& wplus);
/// Lift of φ ∈ su(W) for an anisotropic D = F[c]: φ acts D-linearly on W with D-basis w, 0 on D.
EndV lift_su21(const MatD3& phi, const Octonion& c, const std::array<Octonion, 3>& w);

enum class SemisimpleCase { null, hyperbolic_plane, quadratic_extension, dim4_split_eigen, dim4_hermitian };
std::string to_string(SemisimpleCase c);

/// Caller-supplied certificate of semisimplicity.
struct DecompositionWitness {
  std::vector<Poly> factors;        ///< pairwise coprime and squarefree
  std::vector<SubspaceV> kernels;   ///< kernels[i] ⊆ ker factors[i](β), summing to V
  std::optional<Scalar> sqrt_u;     ///< λ with λ² = u when β_W² = u
  std::optional<Octonion> e_plus;   ///< idempotent of a split V⁰
};

struct SemisimpleAnalysis {
  SemisimpleCase tag = SemisimpleCase::null;
  CompositionSubalgebra v0;
  SubspaceV w;
  MatX<Scalar> beta_w;
  std::optional<Polarization> pol;  ///< case (i)
  MatX<Scalar> beta_wplus;          ///< case (i), in the basis of pol->w_plus
  std::optional<Scalar> u;          ///< cases (iii)/(iv): β_W² = u
  std::optional<Scalar> lambda;     ///< case (iii)
  SubspaceV w_lambda, w_minus_lambda;
  Poly minpoly_w;                   ///< cases (iii)/(iv)
};

/// Checks the witness exactly; raises InvalidWitnessError on failure.
void verify_witness(const EndV& beta, const DecompositionWitness& w);
SemisimpleAnalysis analyze_semisimple(const EndV& beta, const DecompositionWitness& w);

/// Φ(x, y) = ½(f(x, y) + c⁻¹f(cx, y)) as an element of D = F[c] (an octonion).
Octonion hermitian_form(const Octonion& c, const Octonion& x, const Octonion& y);

}  // namespace g2kit
