#include <gtest/gtest.h>

#include "g2kit/fixtures.hpp"
#include "g2kit/norms.hpp"

using namespace g2kit;

namespace {

const FieldContext* f5() { return FieldContext::get({5, 8, Extension::none}); }
Octonion e(int i) { return basis<Scalar>(i); }

NormFn third_norm() {
  NormFn a{{e(1), e(2), e(3)}, {Rational(1, 3), Rational(1, 3), Rational(-2, 3)}};
  return extend_sl3(a, standard_hyperbolic_plane());
}

}  // namespace

TEST(Norms, StandardNorm) {
  NormFn st = standard_norm({});
  EXPECT_TRUE(is_self_dual(st));
  EXPECT_TRUE(is_algebra_norm(st));
  EXPECT_TRUE(triality_exponent_identities(st));
  auto l = lattice_seq_from_norm(st);
  EXPECT_EQ(l.m, 1);
  EXPECT_EQ(l.dual_invariant, 1);
}

TEST(Norms, EvalTakesTheMinimum) {
  auto ctx = f5();
  Scalar t = ctx->t();
  NormFn st = standard_norm({});
  EXPECT_EQ(*eval(st, Octonion(e(1) * t + e(2) * t * t)), Rational(1));
  EXPECT_FALSE(eval(st, Octonion(Octonion::Zero())).has_value());
}

TEST(Norms, WedgeAndTranslate) {
  NormFn st = standard_norm({});
  NormFn sh = translate(st, Rational(1, 2));
  EXPECT_EQ(*eval(sh, e(1)), Rational(1, 2));
  NormFn a{{e(1), e(2)}, {Rational(1), Rational(2)}};
  NormFn b{{e(-1)}, {Rational(-1, 2)}};
  NormFn w = wedge(a, b);
  EXPECT_EQ(w.dim(), 3);
  EXPECT_EQ(*eval(w, Octonion(e(2) + e(-1))), Rational(-1, 2));
  EXPECT_THROW(wedge(st, sh), DomainError);
}

TEST(Norms, DualOfTranslateShiftsBack) {
  NormFn st = standard_norm({});
  EXPECT_TRUE(norm_equal(dual_norm(translate(st, Rational(1, 3))), translate(st, Rational(-1, 3))));
}

TEST(Norms, ThirdsExtensionValues) {
  NormFn n = third_norm();
  EXPECT_TRUE(is_algebra_norm(n));
  EXPECT_TRUE(is_self_dual(n));
  EXPECT_EQ(*eval(n, e(1)), Rational(1, 3));
  EXPECT_EQ(*eval(n, e(-3)), Rational(2, 3));
  EXPECT_EQ(*eval(n, e(4)), Rational(0));
  EXPECT_EQ(*eval(n, e(-4)), Rational(0));
}

// Reference exponents from tools/oracles.py: ⌈i/m − α(b)⌉ on the splitting basis.
TEST(Norms, ThirdsLatticeExponentsMatchOracle) {
  auto l = lattice_seq_from_norm(third_norm());
  EXPECT_EQ(l.m, 3);
  EXPECT_EQ(l.dual_invariant, 1);
  const std::vector<std::vector<std::int64_t>> expected = {
      {0, 0, 0, 0, 1, 1, 1, 0}, {1, 1, 0, 0, 1, 1, 1, 0}, {1, 1, 1, 1, 2, 1, 1, 0}, {1, 1, 1, 1, 2, 2, 2, 1}};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(l.exponents(i), expected[i]) << i;
}

TEST(Norms, LatticeDuality) {
  auto l = lattice_seq_from_norm(third_norm());
  for (int i = -3; i <= 3; ++i) EXPECT_TRUE(lattice_equal(dual_lattice(lattice_at(l, i)), lattice_at(l, 1 - i))) << i;
  EXPECT_TRUE(lattice_contains(lattice_at(l, 0), lattice_at(l, 1)));
  EXPECT_FALSE(lattice_contains(lattice_at(l, 1), lattice_at(l, 0)));
}

TEST(Norms, VolumeZeroIsRequired) {
  auto pol = split_polarization(standard_hyperbolic_plane());
  NormFn ap{{e(1), e(2), e(3)}, {Rational(0), Rational(0), Rational(0)}};
  EXPECT_EQ(volume(ap, pol), Rational(0));
  NormFn bad{{e(1), e(2), e(3)}, {Rational(1), Rational(0), Rational(0)}};
  EXPECT_EQ(volume(bad, pol), Rational(-1));
  EXPECT_THROW(extend_sl3(bad, standard_hyperbolic_plane()), VolumeError);
}

TEST(Norms, SharpDualOnWMinus) {
  auto pol = split_polarization(standard_hyperbolic_plane());
  NormFn ap{{e(1), e(2), e(3)}, {Rational(1, 3), Rational(1, 3), Rational(-2, 3)}};
  NormFn am = sharp_dual(ap, pol);
  EXPECT_EQ(am.dim(), 3);
  EXPECT_EQ(*eval(am, e(-1)), Rational(-1, 3));
  EXPECT_EQ(*eval(am, e(-3)), Rational(2, 3));
}

TEST(Norms, FixtureFamiliesHaveFiveEach) {
  auto fx = norm_fixtures(f5());
  int counts[3] = {0, 0, 0};
  for (const auto& f : fx) {
    ++counts[static_cast<int>(f.family)];
    EXPECT_TRUE(is_algebra_norm(f.full)) << f.name;
    EXPECT_TRUE(is_self_dual(f.full)) << f.name;
    EXPECT_TRUE(norm_equal(restriction(f.full, f.part.space()), f.part)) << f.name;
    EXPECT_FALSE(is_algebra_norm(f.perturbed) && is_self_dual(f.perturbed)) << f.name;
  }
  for (int c : counts) EXPECT_GE(c, 5);
}

TEST(Norms, FixturesIncludeNonIntegerPeriods) {
  bool m3 = false, e2 = false;
  for (const auto& f : norm_fixtures(f5())) {
    int m = lattice_seq_from_norm(f.full).m;
    m3 = m3 || m == 3;
    e2 = e2 || (f.family == NormFamily::su21 && m % 2 == 0);
  }
  EXPECT_TRUE(m3);
  EXPECT_TRUE(e2);
}

TEST(Norms, FiltrationGeneratorsLieInTheirLattice) {
  auto l = lattice_seq_from_norm(third_norm());
  for (int k : {0, 1, 2, 3}) {
    auto fl = filtration_lattice(l, k);
    for (const auto& g : filtration_generators(l, k, f5())) EXPECT_TRUE(fl.contains(g)) << k;
  }
  auto g1 = filtration_generators(l, 1, f5());
  auto g2 = filtration_generators(l, 2, f5());
  auto f3 = filtration_lattice(l, 3);
  for (const auto& a : g1)
    for (const auto& b : g2) EXPECT_TRUE(f3.contains(EndV(a * b)));
}
