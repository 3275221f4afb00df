#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2kit/endomorphisms.hpp"
#include "g2kit/norms.hpp"

namespace g2kit {

/// v_Λ(X) = max{k : X ∈ 𝔄_k(Λ)} on span(basis), which must be X-stable; nullopt when X vanishes there.
std::optional<std::int64_t> lattice_valuation(const std::vector<Octonion>& basis, const std::vector<Rational>& values,
                                              int m, const EndV& x);
std::optional<std::int64_t> lattice_valuation(const LatticeSeq& s, const EndV& x);

/// Lattice sequence of α with period m, a multiple of every denominator of α.
LatticeSeq lattice_seq_with_period(const NormFn& a, int m);
inline NormFn norm_of(const LatticeSeq& s) { return {s.basis, s.values}; }

struct StratumWitness {
  DecompositionWitness decomposition;     ///< factors Ψᵢ with kernels Vⁱ
  std::vector<std::int64_t> valuations;   ///< claimed nᵢ
};

/// [Λ, n, r, β] with its semisimplicity certificate.
struct Stratum {
  LatticeSeq lattice;
  int n = 1;
  int r = 0;
  EndV beta;
  StratumWitness witness;
  std::string justification;  ///< why the blocks do not coalesce
};

enum class ClauseStatus { pass, fail, assumed };
std::string to_string(ClauseStatus s);

struct Clause {
  std::string name;
  ClauseStatus status = ClauseStatus::pass;
  std::string detail;
};

struct StratumReport {
  std::vector<Clause> clauses;
  bool ok() const;
  /// Status of the named clause; UnsupportedError if absent.
  ClauseStatus status(const std::string& name) const;
  std::vector<std::string> failures() const;
};

/// Checks every decidable clause; block simplicity and non-equivalence are recorded as assumed.
StratumReport validate(const Stratum& s);

/// Restricted stratum on W⁺ (i), W (ii, iv) or W_λ (iii); β in the basis of `norm`.
struct RestrictedStratum {
  std::string space;
  NormFn norm;
  int m = 1;
  int n = 1;
  int r = 0;
  MatX<Scalar> beta;
  std::optional<std::int64_t> valuation;
  std::optional<Octonion> c;               ///< (ii): generator of F' = V⁰
  std::vector<Octonion> d_basis;           ///< (ii): F'-basis of W
  std::optional<MatD3> beta_d;             ///< (ii): β_W over F'
  std::optional<Scalar> eigenvalue;        ///< (iii): β on W_λ is λ·Id
  std::optional<Poly> minpoly;             ///< (iv): X² − u
};

struct ClassifiedStratum {
  Stratum stratum;
  SemisimpleCase tag = SemisimpleCase::null;
  SemisimpleAnalysis analysis;
  std::optional<RestrictedStratum> restricted;
  std::vector<std::string> notes;
};

/// InvalidWitnessError on a witness mismatch; PreconditionError if another clause of validate fails.
ClassifiedStratum classify(const Stratum& s);

/// Stratum of 𝔰𝔩(W⁺): φ written in the splitting basis of `norm`, witness factors of φ.
struct Sl3Stratum {
  NormFn norm;
  int m = 1;
  int n = 1;
  int r = 0;
  Mat3 beta;
  std::vector<Poly> factors;
};
/// Stratum of 𝔰𝔲(W): φ written in the F'-basis of `norm`, witness factors of φ over F.
struct Su21Stratum {
  HermitianNormFn norm;
  int m = 1;
  int n = 1;
  int r = 0;
  MatD3 beta;
  std::vector<Poly> factors;
};

/// [Λ̌, n, r, β̌] for a split D; InvalidLiftError on a trace, VolumeError on a non-zero volume.
Stratum lift_type_D(const Sl3Stratum& s, const CompositionSubalgebra& d);
/// [Λ⃗, n, r, β⃗] for D = F[c]; InvalidLiftError unless φ is traceless and anti-hermitian.
Stratum lift_type_D(const Su21Stratum& s);

/// max{k : y ∈ 𝔄_k} for a matrix y written in a splitting basis with values α and period m.
std::optional<std::int64_t> matrix_valuation(const MatX<Scalar>& y, const std::vector<Rational>& values, int m);

/// γ − ⅓tr(γ)·1; DomainError in residue characteristic 3.
Mat3 trace_adjust(const Mat3& g);

}  // namespace g2kit
