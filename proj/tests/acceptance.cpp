#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "g2kit/filtration.hpp"
#include "g2kit/fixtures.hpp"
#include "g2kit/suites.hpp"

using namespace g2kit;

namespace {

const FieldConfig kConfig{5, 8, Extension::none};
constexpr std::uint64_t kSeed = 1;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> checks;
  double limit_s;  // 0 when untimed
  std::function<std::string()> extra;  // empty string when satisfied
  int min_samples = 0;
};

std::string fixture_counts() {
  auto ctx = FieldContext::get(kConfig);
  std::map<NormFamily, int> counts;
  bool m3 = false, e2 = false;
  for (const auto& f : norm_fixtures(ctx)) {
    ++counts[f.family];
    int m = lattice_seq_from_norm(f.full).m;
    m3 = m3 || m == 3;
    e2 = e2 || (f.family == NormFamily::su21 && m % 2 == 0);
  }
  for (auto fam : {NormFamily::sl3, NormFamily::su21, NormFamily::dim4})
    if (counts[fam] < 5) return to_string(fam) + " has " + std::to_string(counts[fam]) + " fixtures";
  if (!m3) return "no m = 3 fixture";
  if (!e2) return "no e = 2 fixture";
  return "";
}

std::string corpus_counts() {
  auto ctx = FieldContext::get(kConfig);
  auto corpus = strata_corpus(ctx);
  if (corpus.size() < 12) return "corpus has " + std::to_string(corpus.size()) + " strata";
  std::map<SemisimpleCase, int> counts;
  for (const auto& f : corpus) ++counts[f.expected];
  for (auto c : {SemisimpleCase::hyperbolic_plane, SemisimpleCase::quadratic_extension, SemisimpleCase::dim4_split_eigen,
                 SemisimpleCase::dim4_hermitian})
    if (counts[c] < 3) return to_string(c) + " has " + std::to_string(counts[c]) + " strata";
  auto bad = corrupted_strata(ctx);
  if (bad.size() < 5) return "only " + std::to_string(bad.size()) + " corrupted fixtures";
  return "";
}

std::string stable_subspace_count() {
  SymplecticSpace v{5, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
  auto n = gamma_stable_subspaces(v).size();
  return n == 64 ? "" : "enumerated " + std::to_string(n) + " stable subspaces, expected 64";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "octonion axioms",
       {"octonion.unit_law", "octonion.conj_antimultiplicative", "octonion.norm_multiplicative", "octonion.form_adjoint",
        "octonion.alternativity"},
       5, nullptr, 500},
      {2, "doubling formula", {"octonion.doubling_formula"}, 0, nullptr},
      {3, "idempotent identities", {"octonion.idempotents"}, 0, nullptr, 100},
      {4, "related triples",
       {"triality.root_triples", "triality.diagonal_triples", "triality.glw_triples", "triality.dim4_triples",
        "triality.dim2_triples"},
       10, nullptr},
      {5, "derivation fixed points", {"triality.derivation_fixed_point"}, 0, nullptr, 200},
      {6, "norm extensions", {"norms.fixtures"}, 0, fixture_counts},
      {7, "filtration and Cayley congruence",
       {"filtration.generator_stability", "filtration.cayley_congruence", "filtration.psi_character"}, 30, nullptr},
      {8, "Cayley transform leaves G2", {"filtration.moy_counterexample"}, 0, nullptr, 3},
      {9, "gamma-perp", {"filtration.gamma_perp_exhaustive", "filtration.gamma_perp_random"}, 60, stable_subspace_count},
      {10, "strata", {"strata.classify_corpus", "strata.lift_round_trip", "strata.corruptions_caught"}, 0, corpus_counts, 5},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    for (const auto& name : c.checks) {
      CheckResult r = run_check(name, kConfig, kSeed);
      if (r.status != CheckStatus::pass) {
        why = name + " " + to_string(r.status) + (r.counterexample ? ": " + *r.counterexample : "");
        break;
      }
      if (r.samples < c.min_samples) {
        why = name + " ran " + std::to_string(r.samples) + " samples";
        break;
      }
    }
    if (why.empty() && c.extra) why = c.extra();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && c.limit_s > 0 && s >= c.limit_s) why = "took " + std::to_string(s) + " s";
    std::printf("criterion %2d %-34s %s (%.2f s)%s%s\n", c.id, c.title.c_str(), why.empty() ? "PASS" : "FAIL", s,
                why.empty() ? "" : " ", why.c_str());
    if (!why.empty()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
