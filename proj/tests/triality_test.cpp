#include <gtest/gtest.h>

#include "g2kit/triality.hpp"

using namespace g2kit;

namespace {

const FieldContext* f5() { return FieldContext::get({5, 8, Extension::none}); }
Octonion e(int i) { return basis<Scalar>(i); }

bool same(const TrialityTriple& a, const TrialityTriple& b) { return a.t1 == b.t1 && a.t2 == b.t2 && a.t3 == b.t3; }

}  // namespace

TEST(Triality, RootTriplesAreRelated) {
  Scalar l = f5()->t() + Scalar(2);
  for (bool lie : {false, true})
    for (int i = 1; i <= 3; ++i)
      for (int p = 0; p < 2; ++p) EXPECT_TRUE(check_related(root_triple(i, p, l, lie))) << lie << i << p;
}

TEST(Triality, FixedRootTriplesAreRelated) {
  Scalar l = f5()->t();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) {
        EXPECT_TRUE(check_related(fixed_root_triple(i, -j, l)));
        EXPECT_TRUE(check_related(fixed_root_triple(i, -j, l, true)));
      }
}

TEST(Triality, UnrelatedTripleIsRejected) {
  Scalar l = f5()->t();
  EndV u = u_ij(1, 2, l);
  EXPECT_FALSE(check_related(u, u, u, false));
  EXPECT_THROW(orbit_triples(TrialityTriple{u, u, u, false}), InvalidTripleError);
}

TEST(Triality, GeneratorsHaveOrdersThreeAndTwo) {
  auto t = root_triple(1, 0, f5()->t(), false);
  EXPECT_TRUE(same(rotate(rotate(rotate(t))), t));
  EXPECT_TRUE(same(swap(swap(t)), t));
  auto orbit = orbit_triples(t);
  ASSERT_EQ(orbit.size(), 6u);
  for (const auto& o : orbit) EXPECT_TRUE(check_related(o));
}

TEST(Triality, HatIsAnInvolution) {
  EndV x = u_ij(2, 4, f5()->t());
  EXPECT_EQ(hat(hat(x)), x);
}

TEST(Triality, DiagonalTriples) {
  for (int i = 1; i <= 4; ++i) EXPECT_TRUE(check_related(diag_lie_triple(i, f5()->t())));
}

TEST(Triality, GlwWitness) {
  auto ctx = f5();
  Scalar t = ctx->t();
  Mat3 g;
  g << Scalar(1), t, Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(2), Scalar(0), t;
  EXPECT_TRUE(check_related(solve_glw(t, g, t)));
  EXPECT_THROW(solve_glw(t, g, Scalar(1)), InvalidWitnessError);
}

TEST(Triality, Dim4Triple) {
  auto ctx = f5();
  Scalar t = ctx->t();
  Dim4Data d;
  d.v0 = double_algebra(standard_hyperbolic_plane(), e(1) + e(-1));
  d.a = e(2) + e(-2) * t;
  Octonion one = unit<Scalar>();
  d.alpha = one + e(1);
  d.delta = one + e(-1) * t;
  d.u = one * Scalar(2) + e(1);
  d.v = one + e(-1);
  auto tr = solve_dim4(d, Scalar(2));
  EXPECT_TRUE(is_isometry(tr.t1));
  EXPECT_TRUE(check_related(tr));
}

TEST(Triality, Dim2Triple) {
  auto ctx = f5();
  Octonion c = e(1) - e(-1) * ctx->from_int(ctx->nonresidue());
  std::array<Octonion, 3> w = {e(2), (e(-4) - e(4)) * Scalar(2), e(-2) * Scalar(2)};
  Octonion one = unit<Scalar>();
  Octonion z = one + c, u2 = one * Scalar(2) + c * Scalar(2);
  ASSERT_EQ(norm_q(u2), Scalar(1));
  MatD3 g;
  for (auto& r : g)
    for (auto& x : r) x = Octonion::Zero();
  g[0][0] = z;
  g[1][1] = u2;
  g[2][2] = z * norm_q(z).inv();
  Dim2Data d{c, w, mul(mul(u2, u2), det_d(g)), g};
  EXPECT_TRUE(check_related(solve_dim2(d, u2)));
}

TEST(Triality, BarwedgeDecomposesProducts) {
  auto ctx = f5();
  Octonion c = e(1) - e(-1) * ctx->from_int(ctx->nonresidue());
  Octonion a = e(-4) - e(4), b = e(2) + e(-2);
  Octonion x = a + mul(c, b), y = b * Scalar(3) + mul(a, b);
  EXPECT_EQ(mul(x, y), Octonion(barwedge(c, a, b, x, y) - hermitian_form(c, x, y)));
}

TEST(Triality, GeneratorFamily) {
  const auto& gens = lie_generators();
  EXPECT_EQ(gens.size(), 28u);
  for (const auto& g : gens) {
    EXPECT_TRUE(is_so(g.x)) << g.name;
    EXPECT_TRUE(check_related(g.triple)) << g.name;
  }
  auto g2 = g2_generators();
  EXPECT_EQ(g2.size(), 14u);
  for (const auto& x : g2) {
    EXPECT_TRUE(is_derivation(x));
    EXPECT_TRUE(is_g2_lie(x));
  }
}

TEST(Triality, SolveLieOnDerivationIsDiagonal) {
  Scalar t = f5()->t();
  auto g2 = g2_generators();
  EndV x = g2[0] * t + g2[5] + g2[9] * Scalar(3);
  auto tr = solve_lie(x);
  EXPECT_EQ(tr.t1, x);
  EXPECT_EQ(tr.t2, x);
  EXPECT_EQ(tr.t3, x);
  EndV y = U_ij(1, 2, t);
  auto ty = solve_lie(y);
  EXPECT_TRUE(check_related(ty));
  EXPECT_FALSE(ty.t2 == y && ty.t3 == y);
}

TEST(Triality, G2GroupElements) {
  Scalar t = f5()->t();
  EXPECT_TRUE(is_g2_element(u_ij(1, -2, t)));
  EXPECT_FALSE(is_g2_element(u_ij(1, 2, t)));
}
