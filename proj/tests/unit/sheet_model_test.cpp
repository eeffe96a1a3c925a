#include <gtest/gtest.h>

#include <algorithm>

#include "comptest/sheet_model.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace comptest {
namespace {

using fixtures::example;

std::vector<std::string> codes(const ValidationReport& report) {
  std::vector<std::string> out;
  for (const Violation& v : report) out.push_back(v.code);
  return out;
}

TestStep* step(TestSequence& t, std::size_t i) { return &t.steps.at(i); }

void assign(TestStep& s, const std::string& signal, const std::string& status) {
  for (Assignment& a : s.assignments) {
    if (a.signal == signal) {
      a.status = status;
      return;
    }
  }
  s.assignments.push_back({signal, status});
}

TEST(Validate, ExampleIsClean) {
  const auto ex = example();
  EXPECT_TRUE(validate_sheets(ex.signals, ex.statuses, ex.test).empty());
}

TEST(Validate, UnknownStatus) {
  auto ex = example();
  assign(*step(ex.test, 4), "INT_ILL", "Hi");
  const auto report = validate_sheets(ex.signals, ex.statuses, ex.test);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].code, "unknown status");
  EXPECT_EQ(report[0].sheet, SheetKind::test);
  EXPECT_EQ(report[0].row, 6);
  EXPECT_EQ(report[0].column, "INT_ILL");
}

TEST(Validate, DirectionMethodMismatch) {
  auto ex = example();
  assign(*step(ex.test, 1), "DS_FL", "Ho");
  const auto report = validate_sheets(ex.signals, ex.statuses, ex.test);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].code, "direction/method mismatch");
  EXPECT_EQ(report[0].column, "DS_FL");
}

TEST(Validate, OutputGetsPutStatus) {
  auto ex = example();
  assign(*step(ex.test, 0), "INT_ILL", "Open");
  EXPECT_EQ(codes(validate_sheets(ex.signals, ex.statuses, ex.test)),
            std::vector<std::string>{"direction/method mismatch"});
}

TEST(Validate, SignalTableRules) {
  auto ex = example();
  auto add = [&](std::string name, std::vector<std::string> pins,
                 std::string initial) {
    ex.signals.rows.push_back(SignalDef{std::move(name), Direction::input,
                                        std::move(pins), std::move(initial),
                                        static_cast<int>(ex.signals.rows.size()) + 2});
  };
  add("IGN_ST", {"X1"}, "Off");
  add("EXTRA1", {"DS_FL"}, "Off");
  add("EXTRA2", {}, "Off");
  add("EXTRA3", {"X3"}, "Nope");
  add("bad name", {"X4"}, "Off");
  const auto c = codes(validate_sheets(ex.signals, ex.statuses, ex.test));
  EXPECT_EQ(c, (std::vector<std::string>{"duplicate signal", "duplicate pin",
                                         "no pins", "unknown status",
                                         "invalid name"}));
}

TEST(Validate, StatusTableRules) {
  auto ex = example();
  ex.statuses.rows[5].min.reset();
  ex.statuses.rows[5].max.reset();  // Lo: no bound
  ex.statuses.rows[1].nom.reset();
  ex.statuses.rows[1].d1.reset();
  ex.statuses.rows[1].d2.reset();
  ex.statuses.rows[1].d3.reset();  // Open: no value
  ex.statuses.rows[3].status = "Off";
  ex.statuses.rows[4].method = "set_can";
  const auto c = codes(validate_sheets(ex.signals, ex.statuses, ex.test));
  EXPECT_NE(std::find(c.begin(), c.end(), "missing bound"), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), "missing value"), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), "duplicate status"), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), "unknown method class"), c.end());
}

TEST(Validate, TestTableRules) {
  auto ex = example();
  ex.test.steps[3].index = 7;
  ex.test.steps[2].dt = Duration{0};
  ex.test.steps[1].assignments.push_back({"GHOST", "Lo"});
  const auto c = codes(validate_sheets(ex.signals, ex.statuses, ex.test));
  EXPECT_EQ(c, (std::vector<std::string>{"unknown signal", "non-positive dt",
                                         "non-consecutive step index"}));
  ex.test.steps.clear();
  EXPECT_EQ(codes(validate_sheets(ex.signals, ex.statuses, ex.test)),
            std::vector<std::string>{"empty test"});
}

TEST(ExpandHolds, ExampleStepThree) {
  const auto ex = example();
  const DenseSequence dense = expand_holds(ex.test, ex.signals);
  ASSERT_EQ(dense.steps.size(), 10u);
  const DenseStep& s3 = dense.steps[3];
  EXPECT_EQ(s3.stimuli, (std::vector<Assignment>{{"IGN_ST", "Off"},
                                                 {"DS_FL", "Closed"},
                                                 {"DS_FR", "Closed"},
                                                 {"DS_RL", "Closed"},
                                                 {"DS_RR", "Closed"},
                                                 {"NIGHT", "0"}}));
  EXPECT_EQ(s3.checks, (std::vector<Assignment>{{"INT_ILL", "Lo"}}));
}

TEST(ExpandHolds, FullRowIsUnchanged) {
  const auto ex = example();
  const DenseSequence dense = expand_holds(ex.test, ex.signals);
  const DenseStep& s0 = dense.steps[0];
  for (const Assignment& a : ex.test.steps[0].assignments) {
    if (a.signal == "INT_ILL") continue;
    EXPECT_NE(std::find(s0.stimuli.begin(), s0.stimuli.end(), a), s0.stimuli.end());
  }
  EXPECT_EQ(s0.remark, ex.test.steps[0].remark);
}

TEST(ExpandHolds, SetOnceHoldsEverywhere) {
  SignalTable signals{{SignalDef{"A", Direction::input, {"PA"}, "Lo", 2}}};
  TestSequence test{"t", {"A"}, {}};
  test.steps.push_back(TestStep{0, Duration{1}, {{"A", "Hi"}}, {}, 2});
  test.steps.push_back(TestStep{1, Duration{1}, {}, {}, 3});
  test.steps.push_back(TestStep{2, Duration{1}, {}, {}, 4});
  const DenseSequence dense = expand_holds(test, signals);
  for (const DenseStep& s : dense.steps) {
    EXPECT_EQ(s.stimuli, (std::vector<Assignment>{{"A", "Hi"}}));
  }
}

TEST(ExpandHolds, BlankOutputMeansNoCheck) {
  auto ex = example();
  ex.test.steps[7].assignments.clear();
  EXPECT_TRUE(expand_holds(ex.test, ex.signals).steps[7].checks.empty());
}

TEST(ExpandHoldsProperty, MatchesBackwardScan) {
  gen::Rng rng(21);
  for (int n = 0; n < 300; ++n) {
    const gen::SheetSet s = gen::sheets(rng);
    const DenseSequence dense = expand_holds(s.test, s.signals);
    ASSERT_EQ(dense.steps.size(), s.test.steps.size());
    for (std::size_t k = 0; k < dense.steps.size(); ++k) {
      const auto expected = oracle::held_at(s.test, s.signals, k);
      ASSERT_EQ(dense.steps[k].stimuli.size(), expected.size());
      for (const Assignment& a : dense.steps[k].stimuli) {
        EXPECT_EQ(a.status, expected.at(a.signal)) << "step " << k << " " << a.signal;
      }
    }
  }
}

TEST(ExpandHoldsProperty, Idempotent) {
  gen::Rng rng(22);
  for (int n = 0; n < 300; ++n) {
    const gen::SheetSet s = gen::sheets(rng);
    const DenseSequence dense = expand_holds(s.test, s.signals);
    const TestSequence again = to_sequence(dense, s.signals);
    EXPECT_EQ(expand_holds(again, s.signals), dense);
  }
}

TEST(ValidateProperty, GeneratedSheetsAreClean) {
  gen::Rng rng(23);
  for (int n = 0; n < 300; ++n) {
    const gen::SheetSet s = gen::sheets(rng);
    const auto report = validate_sheets(s.signals, s.statuses, s.test);
    EXPECT_TRUE(report.empty()) << (report.empty() ? "" : to_string(report[0]));
  }
}

}  // namespace
}  // namespace comptest
