#include <gtest/gtest.h>

#include <random>

#include "g2kit/octonion.hpp"

using namespace g2kit;

namespace {

const FieldContext* f5() { return FieldContext::get({5, 8, Extension::none}); }
Octonion e(int i) { return basis<Scalar>(i); }

std::string entry(const TableEntry& t) {
  if (t.sign == 0) return "0";
  return (t.sign > 0 ? "+" : "-") + std::to_string(label(t.index));
}

}  // namespace

// Rows and columns in storage order; computed by tools/oracles.py from the vector-matrix model.
TEST(Octonion, MultiplicationTableMatchesOracle) {
  const std::vector<std::vector<std::string>> expected = {
      {"+-4", "0", "0", "0", "+3", "+2", "+1", "0"},   {"+-1", "0", "+3", "-2", "0", "0", "-4", "0"},
      {"+-2", "-3", "0", "+1", "0", "-4", "0", "0"},   {"+-3", "+2", "-1", "0", "-4", "0", "0", "0"},
      {"0", "0", "0", "--4", "0", "--1", "+-2", "+3"}, {"0", "0", "--4", "0", "+-1", "0", "--3", "+2"},
      {"0", "--4", "0", "0", "--2", "+-3", "0", "+1"}, {"0", "+-1", "+-2", "+-3", "0", "0", "0", "+4"}};
  const MultTable& tab = mult_table();
  for (int k = 0; k < 8; ++k)
    for (int l = 0; l < 8; ++l) EXPECT_EQ(entry(tab[k][l]), expected[k][l]) << "e" << label(k) << " e" << label(l);
}

TEST(Octonion, BasisOrderAndPositions) {
  for (int k = 0; k < 8; ++k) EXPECT_EQ(pos(label(k)), k);
  EXPECT_EQ(unit<Scalar>(), Octonion(e(-4) + e(4)));
}

TEST(Octonion, WittBasisForms) {
  for (int i : {1, 2, 3, 4}) {
    EXPECT_TRUE(norm_q(e(i)).is_zero());
    EXPECT_TRUE(norm_q(e(-i)).is_zero());
    EXPECT_EQ(bilinear_f(e(i), e(-i)), Scalar(1));
  }
  EXPECT_EQ(norm_q(unit<Scalar>()), Scalar(1));
  EXPECT_EQ(trace(unit<Scalar>()), Scalar(2));
}

TEST(Octonion, CompositionOnRandomSamples) {
  auto ctx = f5();
  std::mt19937_64 rng(5);
  for (int s = 0; s < 50; ++s) {
    Octonion x, y;
    for (int k = 0; k < 8; ++k) {
      x[k] = ctx->random(rng, -1, 2);
      y[k] = ctx->random(rng, -1, 2);
    }
    EXPECT_EQ(norm_q(mul(x, y)), norm_q(x) * norm_q(y));
    EXPECT_EQ(mul(x, g2kit::conj(x)), Octonion(unit<Scalar>() * norm_q(x)));
  }
}

TEST(Octonion, DoublingKinds) {
  auto ctx = f5();
  Scalar t = ctx->t(), nu = ctx->from_int(ctx->nonresidue());
  auto split = double_algebra(center_algebra(), Octonion((e(1) + e(-1)) * ctx->one()));
  EXPECT_EQ(split.kind, SubalgebraKind::split_dim2);
  auto field = double_algebra(center_algebra(), e(1) - e(-1) * nu);
  EXPECT_EQ(field.kind, SubalgebraKind::field_dim2);
  auto ram = double_algebra(center_algebra(), e(1) - e(-1) * t);
  EXPECT_EQ(ram.kind, SubalgebraKind::field_dim2);
  auto div = double_algebra(field, e(2) - e(-2) * t);
  EXPECT_EQ(div.kind, SubalgebraKind::division_dim4);
  auto sq = double_algebra(standard_hyperbolic_plane(), Octonion((e(2) + e(-2)) * ctx->one()));
  EXPECT_EQ(sq.kind, SubalgebraKind::split_dim4);
  EXPECT_TRUE(is_composition(div.basis));
  EXPECT_THROW(double_algebra(center_algebra(), unit<Scalar>()), InvalidDoublingError);
  EXPECT_THROW(double_algebra(center_algebra(), e(1)), InvalidDoublingError);
}

TEST(Octonion, HilbertSymbolMatchesOracle) {
  for (int p : {5, 7}) {
    auto ctx = FieldContext::get({p, 8, Extension::none});
    Scalar t = ctx->t(), nu = ctx->from_int(ctx->nonresidue());
    std::vector<Scalar> xs = {ctx->one(), nu, t, nu * t, ctx->from_int(-1)};
    std::vector<std::vector<int>> expected =
        p == 5 ? std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {1, 1, -1, -1, 1}, {1, -1, 1, -1, 1}, {1, -1, -1, 1, 1}, {1, 1, 1, 1, 1}}
               : std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {1, 1, -1, -1, 1}, {1, -1, -1, 1, -1}, {1, -1, 1, -1, -1}, {1, 1, -1, -1, 1}};
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) EXPECT_EQ(hilbert_symbol(xs[a], xs[b]), expected[a][b]) << "p=" << p << " " << a << "," << b;
  }
}

TEST(Octonion, IdempotentsOfStandardPair) {
  Idempotents id = idempotents_from_isotropic_pair(e(1), e(-1));
  EXPECT_EQ(id.e_plus + id.e_minus, unit<Scalar>());
  EXPECT_EQ(mul(id.e_plus, id.e_plus), id.e_plus);
  EXPECT_EQ(mul(id.c, e(1)), e(1));
  EXPECT_EQ(mul(id.c, e(-1)), Octonion(-e(-1)));
  EXPECT_THROW(idempotents_from_isotropic_pair(e(1), e(-2)), InvalidPairError);
}

TEST(Octonion, StandardPolarization) {
  auto pol = split_polarization(standard_hyperbolic_plane());
  EXPECT_EQ(pol.w_plus.dim(), 3);
  EXPECT_EQ(pol.w_minus.dim(), 3);
  EXPECT_EQ(pol.w_plus, SubspaceV::span({e(1), e(2), e(3)}));
  EXPECT_EQ(pol.e_plus, e(-4));
  EXPECT_THROW(split_polarization(center_algebra()), WrongKindError);
}

TEST(Octonion, SubspaceOperations) {
  SubspaceV a = SubspaceV::span({e(1), e(2)}), b = SubspaceV::span({e(2), e(3)});
  EXPECT_EQ(a.intersect(b), SubspaceV::span({e(2)}));
  EXPECT_EQ((a + b).dim(), 3);
  EXPECT_EQ(a.orthogonal().dim(), 6);
  EXPECT_TRUE(a.orthogonal().contains(e(1)));
  EXPECT_FALSE(a.orthogonal().contains(e(-1)));
}

TEST(Octonion, MonomialSqrt) {
  auto ctx = f5();
  EXPECT_EQ(*monomial_sqrt(ctx->monomial(4, 2)) * *monomial_sqrt(ctx->monomial(4, 2)), ctx->monomial(4, 2));
  EXPECT_FALSE(monomial_sqrt(ctx->monomial(2, 2)).has_value());
  EXPECT_FALSE(monomial_sqrt(ctx->monomial(1, 1)).has_value());
}

TEST(Octonion, HilbertSymbolOverExtensions) {
  for (auto ext : {Extension::unramified, Extension::ramified}) {
    auto ctx = FieldContext::get({7, 8, ext});
    Scalar pi = ctx->uniformizer(), u = ctx->nonsquare_unit();
    EXPECT_EQ(hilbert_symbol(u, pi), -1);
    EXPECT_EQ(hilbert_symbol(u, u), 1);
    EXPECT_EQ(hilbert_symbol(pi, Scalar(pi * pi)), 1);
    EXPECT_EQ(hilbert_symbol(Scalar(u * pi), pi), -hilbert_symbol(pi, pi));
  }
}
