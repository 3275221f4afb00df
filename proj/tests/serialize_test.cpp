#include <gtest/gtest.h>

#include "g2kit/fixtures.hpp"
#include "g2kit/serialize.hpp"

using namespace g2kit;

namespace {

const FieldContext* f5() { return FieldContext::get({5, 8, Extension::none}); }
Octonion e(int i) { return basis<Scalar>(i); }

}  // namespace

TEST(Serialize, FieldConfig) {
  FieldConfig c{7, 12, Extension::ramified};
  EXPECT_EQ(field_config_from_json(to_json(c)), c);
  EXPECT_THROW(field_config_from_json(Json{{"p", 7}}), ParseError);
}

TEST(Serialize, ScalarAndOctonion) {
  auto ctx = f5();
  Scalar x = ctx->parse("3*t^-1 + 2 + t^4");
  EXPECT_EQ(scalar_from_json(to_json(x), ctx), x);
  Octonion o = e(1) * x + e(-4) * ctx->t();
  EXPECT_EQ(octonion_from_json(Json::parse(to_json(o).dump()), ctx), o);
  EXPECT_THROW(octonion_from_json(Json::array({"1", "2"}), ctx), ParseError);
  EXPECT_THROW(scalar_from_json(Json(3.5), ctx), ParseError);
}

TEST(Serialize, EndomorphismAndTriple) {
  auto ctx = f5();
  EndV x = u_ij(1, 2, ctx->t());
  EXPECT_EQ(end_from_json(to_json(x), ctx), x);
  auto tr = root_triple(2, 1, ctx->t(), true);
  auto back = triple_from_json(to_json(tr), ctx);
  EXPECT_EQ(back.t1, tr.t1);
  EXPECT_EQ(back.t3, tr.t3);
  EXPECT_EQ(back.lie, tr.lie);
}

TEST(Serialize, NormAndLattice) {
  auto ctx = f5();
  for (const auto& f : norm_fixtures(ctx)) {
    EXPECT_TRUE(norm_equal(norm_from_json(to_json(f.full), ctx), f.full)) << f.name;
    auto l = lattice_seq_from_norm(f.full);
    auto lb = lattice_seq_from_json(Json::parse(to_json(l).dump()), ctx);
    EXPECT_EQ(lb.m, l.m) << f.name;
    EXPECT_EQ(lb.values, l.values) << f.name;
  }
  EXPECT_THROW(norm_from_json(Json{{"basis", Json::array()}, {"values", Json::array({"1/2"})}}, ctx), ParseError);
}

TEST(Serialize, PolyRoundTrip) {
  auto ctx = f5();
  Poly q({ctx->t(), Scalar(0), Scalar(1)});
  auto back = poly_from_json(to_json(q), ctx);
  EXPECT_EQ(to_json(back), to_json(q));
}

TEST(Serialize, StrataRoundTrip) {
  auto ctx = f5();
  for (const auto& f : strata_corpus(ctx)) {
    Stratum back = stratum_from_json(Json::parse(to_json(f.stratum).dump()), ctx);
    EXPECT_EQ(back.beta, f.stratum.beta) << f.name;
    EXPECT_EQ(back.witness.valuations, f.stratum.witness.valuations) << f.name;
    EXPECT_EQ(classify(back).tag, f.expected) << f.name;
  }
  EXPECT_THROW(stratum_from_json(Json::object(), ctx), ParseError);
}

TEST(Serialize, CheckReport) {
  CheckReport r;
  r.check = "quotient_iso";
  r.parameters = {{"r", "1"}, {"s", "2"}};
  r.generators_tested = 9;
  r.violations = {"x"};
  auto back = check_report_from_json(to_json(r));
  EXPECT_EQ(back.check, r.check);
  EXPECT_EQ(back.generators_tested, 9);
  EXPECT_EQ(back.violations, r.violations);
}
