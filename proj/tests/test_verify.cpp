#include <gtest/gtest.h>

#include "bcr/json_io.hpp"
#include "bcr/verify.hpp"

using namespace bcr;

namespace {

VerifyOptions small(Parity p) {
  VerifyOptions o;
  o.caps = {6, 7};
  o.parity = p;
  return o;
}

}  // namespace

TEST(Suites, PassAtSmallCapsInBothParities) {
  for (Parity p : {Parity::Even, Parity::Odd})
    for (SuiteId s : kAllSuites) {
      auto r = run_suite(s, small(p));
      EXPECT_TRUE(r.passed()) << to_string(s) << " " << to_string(p) << ": " << r.to_json(false).dump(1);
      EXPECT_FALSE(r.components.empty());
    }
}

TEST(Suites, OddParityAtFullCaps) {
  VerifyOptions o;
  o.parity = Parity::Odd;
  o.jobs = 4;
  for (SuiteId s : kAllSuites) {
    auto r = run_suite(s, o);
    EXPECT_TRUE(r.passed()) << to_string(s);
  }
}

TEST(Suites, InjectedFaultIsCaught) {
  auto o = small(Parity::Even);
  o.generator.corrupt_stu = true;
  auto r = run_suite(SuiteId::Pbw, o);
  ASSERT_FALSE(r.passed());
  const auto& f = r.components.front().failures.empty()
                      ? std::find_if(r.components.begin(), r.components.end(),
                                     [](const ComponentReport& c) { return !c.failures.empty(); })
                            ->failures.front()
                      : r.components.front().failures.front();
  EXPECT_NE(f.replay.find("--inject-fault stu"), std::string::npos);
  EXPECT_NE(f.replay.find("--only "), std::string::npos);
  EXPECT_EQ(r.to_json()["fault_injection"], "stu");
}

TEST(Suites, OnlyRestrictsTheSweep) {
  auto o = small(Parity::Even);
  o.only = GradedComponent{4, 4, Parity::Even};
  auto r = run_suite(SuiteId::IhxInStu, o);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].id.V, 4);
  o.only = GradedComponent{10, 10, Parity::Even};
  EXPECT_THROW(run_suite(SuiteId::Pbw, o), CapsExceeded);
}

TEST(Suites, ReportsAreDeterministic) {
  for (SuiteId s : {SuiteId::Kappa, SuiteId::Sliding, SuiteId::SigmaWords}) {
    auto o = small(Parity::Odd);
    auto a = run_suite(s, o).to_json().dump();
    o.jobs = 3;
    EXPECT_EQ(run_suite(s, o).to_json().dump(), a) << to_string(s);
  }
}

TEST(Suites, WitnessesReverify) {
  std::size_t n = 0;
  for (SuiteId s : {SuiteId::Kappa, SuiteId::IhxInStu, SuiteId::Sliding}) {
    auto r = run_suite(s, small(Parity::Even));
    for (const auto& c : r.components)
      for (auto w : c.witnesses) {
        ASSERT_TRUE(w.verify()) << w.check;
        ++n;
        w.target.add(w.target.begin()->first, 1);
        EXPECT_FALSE(w.verify());
      }
  }
  EXPECT_GT(n, 50u);
}

TEST(Suites, QuestionIsEvidenceOnly) {
  auto r = run_suite(SuiteId::Question, small(Parity::Even));
  EXPECT_TRUE(r.evidence_only());
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.totals()["dim_B"], 0u);
}

TEST(Json, MatrixExport) {
  Component comp({4, 4, Parity::Even});
  auto j = matrix_json(comp.relation_set(SpaceId::A));
  EXPECT_EQ(j["basis"].size(), comp.basis(GraphClass::BCR).size());
  for (const auto& row : j["rows"])
    for (const auto& entry : row["entries"]) EXPECT_EQ(entry.size(), 3u);
  EXPECT_EQ(integer_json(mpz_class("123456789012345678901234567890")), "123456789012345678901234567890");
  EXPECT_EQ(integer_json(mpz_class(-5)), -5);
  EXPECT_EQ(table_header(Parity::Odd, {})["format_version"], kFormatVersion);
}
