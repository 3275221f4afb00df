#include <gtest/gtest.h>

#include "g2kit/endomorphisms.hpp"

using namespace g2kit;

namespace {

const FieldContext* f5() { return FieldContext::get({5, 8, Extension::none}); }
Octonion e(int i) { return basis<Scalar>(i); }

}  // namespace

TEST(Endomorphisms, RootElements) {
  Scalar t = f5()->t();
  EXPECT_TRUE(is_isometry(u_ij(1, 2, t)));
  EXPECT_TRUE(is_automorphism(u_ij(1, -2, t)));
  EXPECT_FALSE(is_automorphism(u_ij(1, 2, t)));
  EXPECT_TRUE(is_so(U_ij(1, 2, t)));
  EXPECT_FALSE(is_derivation(U_ij(1, 2, t)));
  EXPECT_EQ(u_ij(1, 2, t) * e(1), Octonion(e(1) + e(-2) * t));
  EXPECT_EQ(u_ij(1, 2, t) * e(2), Octonion(e(2) - e(-1) * t));
}

TEST(Endomorphisms, DiagonalElements) {
  Scalar t = f5()->t();
  EXPECT_EQ(d_i(2, t) * e(2), Octonion(e(2) * t));
  EXPECT_EQ(d_i(2, t) * e(-2), Octonion(e(-2) * t.inv()));
  EXPECT_EQ(D_i(2, t) * e(-2), Octonion(-e(-2) * t));
  EXPECT_TRUE(is_so(D_i(1, t)));
  EXPECT_TRUE(is_isometry(d_i(3, t)));
}

TEST(Endomorphisms, AdjointIsAnInvolution) {
  Scalar t = f5()->t();
  EndV x = U_ij(1, -3, t) + D_i(2, Scalar(2));
  EXPECT_EQ(adjoint(adjoint(x)), x);
  EXPECT_EQ(adjoint(x), EndV(-x));
}

TEST(Endomorphisms, Sl3LiftIsADerivation) {
  auto ctx = f5();
  Scalar t = ctx->t();
  Mat3 phi = Mat3::Zero();
  phi(0, 0) = t;
  phi(1, 1) = Scalar(2) * t;
  phi(2, 2) = Scalar(-3) * t;
  phi(0, 1) = t * t;
  EndV x = lift_sl3(phi);
  EXPECT_TRUE(is_derivation(x));
  auto pol = split_polarization(standard_hyperbolic_plane());
  EXPECT_EQ(lift_sl3(phi, pol, {e(1), e(2), e(3)}), x);
  phi(0, 0) = Scalar(1);
  EXPECT_THROW(lift_sl3(phi), InvalidLiftError);
}

TEST(Endomorphisms, Su21LiftIsADerivation) {
  auto ctx = f5();
  Scalar t = ctx->t(), nu = ctx->from_int(ctx->nonresidue());
  for (const Scalar& mu : {Scalar(-nu), Scalar(-t)}) {
    Octonion c = e(1) + e(-1) * mu;
    std::array<Octonion, 3> w = {e(2), (e(-4) - e(4)) * Scalar(2), e(-2) * Scalar(2)};
    MatD3 phi;
    for (auto& r : phi)
      for (auto& q : r) q = Octonion::Zero();
    Octonion one = unit<Scalar>();
    phi[0][0] = one * t.inv() + c * t.inv();
    phi[1][1] = c * (Scalar(-2) * t.inv());
    phi[2][2] = one * (-t.inv()) + c * t.inv();
    EXPECT_TRUE(is_derivation(lift_su21(phi, c, w)));
  }
}

TEST(Endomorphisms, IotaIsAnIsometry) {
  auto ctx = f5();
  Scalar t = ctx->t();
  Mat3 g = Mat3::Identity();
  g(0, 0) = t;
  g(1, 1) = t.inv();
  g(0, 2) = Scalar(3);
  EXPECT_TRUE(is_automorphism(iota(Scalar(1), g)));
  EXPECT_TRUE(is_isometry(iota(t, g)));
  EXPECT_FALSE(is_automorphism(iota(t, g)));
}

TEST(Endomorphisms, AnalyzeSplitTorus) {
  auto ctx = f5();
  Scalar t = ctx->t(), ti = t.inv();
  Mat3 dg = Mat3::Zero();
  dg(0, 0) = ti;
  dg(1, 1) = Scalar(1);
  dg(2, 2) = -ti - Scalar(1);
  EndV beta = lift_sl3(dg);
  DecompositionWitness w;
  for (const Scalar& ev : {Scalar(0), ti, Scalar(-ti), Scalar(1), Scalar(-1), Scalar(ti + Scalar(1)), Scalar(-ti - Scalar(1))}) {
    w.factors.push_back(Poly({-ev, Scalar(1)}));
    w.kernels.push_back(SubspaceV(kernel<Scalar>(EndV(beta - identity_end() * ev))));
  }
  auto an = analyze_semisimple(beta, w);
  EXPECT_EQ(an.tag, SemisimpleCase::hyperbolic_plane);
  EXPECT_EQ(an.v0.dim(), 2);
  ASSERT_TRUE(an.pol.has_value());
  EXPECT_EQ(an.pol->w_plus.dim(), 3);
}

TEST(Endomorphisms, WitnessMustAnnihilate) {
  auto ctx = f5();
  Scalar t = ctx->t();
  Mat3 dg = Mat3::Zero();
  dg(0, 0) = t.inv();
  dg(1, 1) = -t.inv();
  EndV beta = lift_sl3(dg);
  DecompositionWitness w;
  w.factors.push_back(Poly({Scalar(0), Scalar(1)}));
  w.kernels.push_back(SubspaceV::whole());
  EXPECT_THROW(verify_witness(beta, w), InvalidWitnessError);
}

TEST(Endomorphisms, HermitianFormOnSplitPlane) {
  auto ctx = f5();
  Octonion c = e(1) - e(-1) * ctx->from_int(ctx->nonresidue());
  Octonion h = hermitian_form(c, e(2), e(-2));
  EXPECT_NE(h, Octonion(Octonion::Zero()));
  EXPECT_EQ(hermitian_form(c, e(2), e(2)), Octonion(Octonion::Zero()));
}
