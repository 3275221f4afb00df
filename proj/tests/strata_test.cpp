#include <gtest/gtest.h>

#include <map>

#include "g2kit/fixtures.hpp"
#include "g2kit/strata.hpp"

using namespace g2kit;

namespace {

const FieldContext* f5() { return FieldContext::get({5, 8, Extension::none}); }

}  // namespace

TEST(Strata, CorpusCoversEveryCase) {
  auto corpus = strata_corpus(f5());
  EXPECT_GE(corpus.size(), 12u);
  std::map<SemisimpleCase, int> counts;
  for (const auto& f : corpus) ++counts[f.expected];
  for (auto c : {SemisimpleCase::hyperbolic_plane, SemisimpleCase::quadratic_extension, SemisimpleCase::dim4_split_eigen,
                 SemisimpleCase::dim4_hermitian})
    EXPECT_GE(counts[c], 3) << to_string(c);
}

TEST(Strata, CorpusValidatesAndClassifies) {
  for (const auto& f : strata_corpus(f5())) {
    auto rep = validate(f.stratum);
    EXPECT_TRUE(rep.ok()) << f.name;
    EXPECT_EQ(rep.status("block_simplicity"), ClauseStatus::assumed) << f.name;
    EXPECT_EQ(classify(f.stratum).tag, f.expected) << f.name;
  }
}

TEST(Strata, UnknownClauseThrows) {
  auto f = strata_corpus(f5()).front();
  EXPECT_THROW(validate(f.stratum).status("no_such_clause"), UnsupportedError);
}

TEST(Strata, CorruptionsFailTheirClause) {
  auto bad = corrupted_strata(f5());
  EXPECT_GE(bad.size(), 5u);
  for (const auto& c : bad) {
    auto rep = validate(c.stratum);
    EXPECT_FALSE(rep.ok()) << c.name;
    EXPECT_EQ(rep.status(c.clause), ClauseStatus::fail) << c.name;
    EXPECT_ANY_THROW(classify(c.stratum)) << c.name;
  }
}

TEST(Strata, Sl3LiftRoundTrip) {
  int seen = 0;
  for (const auto& f : strata_corpus(f5())) {
    if (!f.sl3 || f.expected != SemisimpleCase::hyperbolic_plane) continue;
    ++seen;
    auto c = classify(f.stratum);
    ASSERT_TRUE(c.restricted.has_value()) << f.name;
    EXPECT_TRUE(norm_equal(c.restricted->norm, f.sl3->norm)) << f.name;
    EXPECT_TRUE(mat_equal<Scalar>(c.restricted->beta, MatX<Scalar>(f.sl3->beta))) << f.name;
  }
  EXPECT_GE(seen, 1);
}

TEST(Strata, LiftRejectsATrace) {
  for (const auto& f : strata_corpus(f5())) {
    if (!f.sl3) continue;
    Sl3Stratum s = *f.sl3;
    s.beta(0, 0) = s.beta(0, 0) + f5()->t().inv();
    EXPECT_THROW(lift_type_D(s, *f.d), InvalidLiftError) << f.name;
    return;
  }
  FAIL() << "no sl3 fixture";
}

TEST(Strata, WitnessValuationsMatter) {
  for (const auto& f : strata_corpus(f5())) {
    if (f.stratum.witness.valuations.empty()) continue;
    Stratum s = f.stratum;
    s.witness.valuations[0] += 1;
    EXPECT_FALSE(validate(s).ok()) << f.name;
    return;
  }
}

TEST(Strata, TraceAdjustIsTraceless) {
  auto ctx = f5();
  Mat3 g = Mat3::Identity();
  g(0, 1) = ctx->t();
  g(2, 2) = Scalar(4);
  Mat3 h = trace_adjust(g);
  EXPECT_EQ(Scalar(h.trace()), Scalar(0));
}
