#include <gtest/gtest.h>

#include <random>

#include "g2kit/scalar.hpp"

using namespace g2kit;

namespace {

const FieldContext* field(int p, int n = 8, Extension ext = Extension::none) { return FieldContext::get({p, n, ext}); }

}  // namespace

TEST(FieldConfig, RejectsBadPrimes) {
  EXPECT_THROW((FieldConfig{4, 8, Extension::none}.validate()), ConfigError);
  EXPECT_THROW((FieldConfig{3, 8, Extension::none}.validate()), ConfigError);
  EXPECT_THROW((FieldConfig{2, 8, Extension::none}.validate()), ConfigError);
  EXPECT_THROW((FieldConfig{5, 2, Extension::none}.validate()), ConfigError);
  EXPECT_NO_THROW((FieldConfig{7, 10, Extension::none}.validate()));
  EXPECT_THROW(extension_from_string("cubic"), ConfigError);
  EXPECT_EQ(extension_from_string("ramified"), Extension::ramified);
}

TEST(FieldContext, IsCachedPerConfig) {
  EXPECT_EQ(field(5), field(5));
  EXPECT_NE(field(5), field(7));
  EXPECT_EQ(field(5)->p(), 5);
  EXPECT_EQ(field(5)->nonresidue(), 2u);
  EXPECT_EQ(field(7)->nonresidue(), 3u);
}

// Reference values from tools/oracles.py.
TEST(Scalar, InverseMatchesOracle) {
  EXPECT_EQ(field(5)->parse("1 + t + 2*t^2").inv().str(), "1 + 4*t + 4*t^2 + 3*t^3 + 4*t^4 + 2*t^6 + 3*t^7 + O(t^8)");
  EXPECT_EQ(field(7)->parse("1 + t + 2*t^2").inv().str(), "1 + 6*t + 6*t^2 + 3*t^3 + 6*t^4 + 2*t^5 + 3*t^7 + O(t^8)");
}

TEST(Scalar, PrincipalUnitSqrtMatchesOracle) {
  EXPECT_EQ(principal_unit_sqrt(field(5)->parse("1 + t")).str(), "1 + 3*t + 3*t^2 + 1*t^3 + 2*t^5 + 1*t^6 + 1*t^7 + O(t^8)");
  EXPECT_EQ(principal_unit_sqrt(field(7)->parse("1 + t")).str(), "1 + 4*t + 6*t^2 + 4*t^3 + 1*t^4 + 3*t^7 + O(t^8)");
  Scalar r = principal_unit_sqrt(field(5)->parse("1 + t"));
  EXPECT_EQ(r * r, field(5)->parse("1 + t"));
}

TEST(Scalar, ExactProductsStayExact) {
  auto ctx = field(5);
  Scalar x = ctx->parse("3*t^-1 + t") * ctx->parse("2*t + 4*t^3");
  EXPECT_EQ(x.str(), "1 + 4*t^2 + 4*t^4");
  EXPECT_TRUE(x.is_exact());
  EXPECT_EQ(x.val(), 0);
}

TEST(Scalar, ParseRoundTrip) {
  auto ctx = field(7);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    Scalar x = ctx->random(rng, -3, 4);
    EXPECT_EQ(ctx->parse(x.str()), x) << x.str();
  }
  Scalar y = ctx->parse("2*t^-1 + 3 + O(t^4)");
  EXPECT_FALSE(y.is_exact());
  EXPECT_EQ(y.abs_prec(), 4);
  EXPECT_THROW(ctx->parse("2*x"), ParseError);
  EXPECT_THROW(ctx->parse("t^"), ParseError);
}

TEST(Scalar, FieldAxiomsOnRandomSamples) {
  auto ctx = field(5);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    Scalar a = ctx->random(rng, -2, 2), b = ctx->random(rng, -2, 2), c = ctx->random(rng, -2, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    if (!a.is_zero()) EXPECT_EQ(a * a.inv(), ctx->one());
  }
}

TEST(Scalar, Errors) {
  auto ctx = field(5);
  EXPECT_THROW(ctx->zero().inv(), DivisionByZeroError);
  EXPECT_THROW(ctx->from_rational(1, 5), DivisionByZeroError);
  EXPECT_THROW(ctx->t() + field(7)->t(), ConfigMismatchError);
  Scalar big = ctx->parse("1 + t^6");
  EXPECT_THROW(big * big, PrecisionError);
  EXPECT_THROW(ctx->omega(), UnsupportedError);
}

TEST(Scalar, Squares) {
  auto ctx = field(5);
  Scalar t = ctx->t(), nu = ctx->from_int(ctx->nonresidue());
  EXPECT_FALSE(is_square(t));
  EXPECT_TRUE(is_square(t * t));
  EXPECT_FALSE(is_square(nu));
  EXPECT_TRUE(is_square(ctx->from_int(4)));
  EXPECT_TRUE(is_square(ctx->parse("4 + t")));
  EXPECT_FALSE(is_square(ctx->parse("2*t^2 + t^3")));
}

TEST(Scalar, ResidueCharacter) {
  auto ctx = field(7);
  EXPECT_EQ(residue_character(ctx->parse("3*t^-1")), 3u);
  EXPECT_EQ(residue_character(ctx->parse("3*t^-1 + 5 + t")), 3u);
  EXPECT_EQ(residue_character(ctx->from_int(3)), 0u);
  EXPECT_THROW(residue_character(ctx->parse("t^-2")), NotInDomainError);
}

TEST(Scalar, RamifiedUniformizerSquaresToT) {
  auto ctx = field(5, 8, Extension::ramified);
  Scalar s = ctx->uniformizer();
  EXPECT_EQ(s * s, ctx->embed(field(5)->t()));
  EXPECT_EQ(s.valuation(), Rational(1, 2));
}

TEST(Scalar, UnramifiedOmegaIsNotInBase) {
  auto ctx = field(5, 8, Extension::unramified);
  Scalar w = ctx->omega();
  EXPECT_FALSE((w * w).is_zero());
  EXPECT_TRUE(is_square(ctx->embed(field(5)->from_int(2))));
}

TEST(Scalar, NonsquareUnitPerModel) {
  for (auto ext : {Extension::none, Extension::unramified, Extension::ramified}) {
    auto ctx = FieldContext::get({7, 8, ext});
    Scalar u = ctx->nonsquare_unit();
    EXPECT_EQ(u.val(), 0);
    EXPECT_FALSE(is_square(u)) << to_string(ext);
  }
}
