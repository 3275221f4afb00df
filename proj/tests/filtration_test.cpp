#include <gtest/gtest.h>

#include "g2kit/filtration.hpp"

using namespace g2kit;

namespace {

const FieldContext* f5() { return FieldContext::get({5, 8, Extension::none}); }
Octonion e(int i) { return basis<Scalar>(i); }

LatticeSeq standard_seq() { return lattice_seq_from_norm(standard_norm({})); }

LatticeSeq third_seq() {
  NormFn a{{e(1), e(2), e(3)}, {Rational(1, 3), Rational(1, 3), Rational(-2, 3)}};
  return lattice_seq_from_norm(extend_sl3(a, standard_hyperbolic_plane()));
}

SymplecticSpace swap_space() {
  return {5, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
}

}  // namespace

TEST(Cayley, BasicIdentities) {
  Scalar t = f5()->t();
  EXPECT_EQ(cayley(EndV::Zero()), EndV(EndV::Identity()));
  EXPECT_EQ(cayley(D_i(1, t)), d_i(1, cayley_scalar(t)));
  EXPECT_EQ(cayley(U_ij(1, 2, t)), u_ij(1, 2, t));
  EXPECT_EQ(cayley_inv(cayley(U_ij(1, 2, t))), U_ij(1, 2, t));
  EXPECT_THROW(cayley(EndV(identity_end() * Scalar(2))), SingularityError);
}

TEST(Cayley, MoyCounterexample) {
  Scalar t = f5()->t();
  EXPECT_TRUE(moy_counterexample(t));
  EXPECT_TRUE(moy_counterexample(t * t));
  EXPECT_TRUE(moy_counterexample(t * Scalar(3)));
  EXPECT_THROW(moy_counterexample(Scalar(1)), PreconditionError);
}

TEST(Filtration, QuotientIsoStandard) {
  auto r = quotient_iso_check(standard_seq(), 1, 2, f5());
  EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_GT(r.generators_tested, 0);
  EXPECT_EQ(r.check, "quotient_iso");
}

TEST(Filtration, QuotientIsoThirds) {
  auto r = quotient_iso_check(third_seq(), 2, 3, f5());
  EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
}

TEST(Filtration, WindowPrecondition) {
  EXPECT_THROW(quotient_iso_check(standard_seq(), 1, 3, f5()), PreconditionError);
  EXPECT_THROW(quotient_iso_check(standard_seq(), 0, 0, f5()), PreconditionError);
  EXPECT_THROW(psi_check(standard_seq(), 2, 5, f5()), PreconditionError);
}

TEST(Filtration, PsiReadsTheConstantCoefficient) {
  auto ctx = f5();
  EXPECT_EQ(psi(ctx->parse("3 + t")), 3u);
  EXPECT_EQ(psi(ctx->parse("4*t^-1 + 2")), 2u);
  EXPECT_EQ(psi(ctx->t()), 0u);
}

TEST(Filtration, PsiMembership) {
  auto ctx = f5();
  auto s = standard_seq();
  EndV x = EndV::Identity() + U_ij(1, 2, ctx->t());
  EXPECT_NO_THROW(psi_b(s, 1, 2, U_ij(2, 1, ctx->t().inv()), x));
  EXPECT_THROW(psi_b(s, 1, 2, U_ij(2, 1, ctx->monomial(1, -2)), x), LatticeMembershipError);
}

TEST(Filtration, PsiCheckStandard) {
  auto r = psi_check(standard_seq(), 1, 2, f5());
  EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
}

TEST(Filtration, TraceFormIsTrialityInvariant) {
  Scalar t = f5()->t();
  const auto& g = lie_generators();
  EXPECT_TRUE(trace_triality_invariance(EndV(g[5].x * t + g[11].x), EndV(g[20].x + g[2].x * t)));
  EXPECT_THROW(trace_triality_invariance(EndV(identity_end()), EndV(identity_end())), UnsupportedError);
}

// 1120 subspaces of F5⁴, 64 of them stable under the swap; tools/oracles.py.
TEST(GammaPerp, EnumerationMatchesOracle) {
  auto v = swap_space();
  EXPECT_EQ(gamma_stable_subspaces(v).size(), 64u);
  SymplecticSpace trivial = v;
  trivial.gamma = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(gamma_stable_subspaces(trivial).size(), 1120u);
}

TEST(GammaPerp, IdentityOnASpan) {
  auto r = gamma_perp(swap_space(), {{1, 1, 0, 0}});
  EXPECT_TRUE(r.identity);
  EXPECT_TRUE(r.decomposition);
  EXPECT_EQ(r.dim_fixed, 2);
  EXPECT_EQ(r.dim_x_fixed, 1);
}

TEST(GammaPerp, BadInputs) {
  auto v = swap_space();
  EXPECT_THROW(gamma_perp(v, {{1, 0, 0, 0}}), InvalidInputError);
  SymplecticSpace bad = v;
  bad.p = 3;
  EXPECT_THROW(gamma_perp(bad, {}), InvalidInputError);
  bad = v;
  bad.gamma = {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_THROW(gamma_perp(bad, {}), InvalidInputError);
  bad = v;
  bad.form[0][2] = 2;
  EXPECT_THROW(gamma_perp(bad, {}), InvalidInputError);
}

TEST(Cayley, MoyNeedsPrecisionBeyondTheGap) {
  auto ctx = FieldContext::get({5, 6, Extension::none});
  EXPECT_TRUE(moy_counterexample(ctx->t()));
  EXPECT_THROW(moy_counterexample(ctx->monomial(1, 2)), PrecisionError);
}

TEST(Filtration, PsiOverExtensions) {
  auto un = FieldContext::get({7, 8, Extension::unramified});
  EXPECT_EQ(psi(un->monomial({3, 5}, 0)), 6u);
  EXPECT_EQ(psi(un->monomial({3, 5}, 1)), 0u);
  auto ram = FieldContext::get({7, 8, Extension::ramified});
  EXPECT_EQ(psi(ram->monomial({3, 0}, 0)), 3u);
  EXPECT_EQ(psi(ram->uniformizer()), 0u);
}
