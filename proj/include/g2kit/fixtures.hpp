#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2kit/strata.hpp"

namespace g2kit {

struct StratumFixture {
  std::string name;
  SemisimpleCase expected;
  Stratum stratum;
  std::optional<Sl3Stratum> sl3;     ///< set when built by an 𝔰𝔩(W⁺) lift
  std::optional<Su21Stratum> su21;   ///< set when built by an 𝔰𝔲(W) lift
  std::optional<CompositionSubalgebra> d;
};
/// At least three strata per case (i)–(iv), plus a null stratum.
std::vector<StratumFixture> strata_corpus(const FieldContext* ctx);

struct CorruptedFixture {
  std::string name;
  Stratum stratum;
  std::string clause;  ///< the clause of validate that must fail
};
std::vector<CorruptedFixture> corrupted_strata(const FieldContext* ctx);

enum class NormFamily { sl3, su21, dim4 };
std::string to_string(NormFamily f);

struct NormFixture {
  std::string name;
  NormFamily family;
  NormFn full;        ///< the extended norm on V
  NormFn part;        ///< the input norm on W⁺, W (rescaled to F) or D^⊥
  NormFn perturbed;   ///< full with the D-part moved off the unique extension
};
/// Self-dual algebra norms from extend_sl3, extend_su21 and extend_dim4, several per family.
std::vector<NormFixture> norm_fixtures(const FieldContext* ctx);

/// Split quaternion algebra span(e±4, e±1) and a division one built by doubling.
CompositionSubalgebra split_quaternion_fixture();
CompositionSubalgebra division_quaternion_fixture(const FieldContext* ctx);

/// β(v + v'a) = (cv')a on V⁰ ⊕ V⁰a for c ∈ V⁰ of trace 0, a ∈ (V⁰)^⊥ anisotropic.
EndV quaternion_derivation(const CompositionSubalgebra& v0, const Octonion& c, const Octonion& a);

}  // namespace g2kit
