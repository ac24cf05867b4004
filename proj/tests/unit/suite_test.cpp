#include <gtest/gtest.h>

#include "revroot/bench/paper_tables.hpp"
#include "revroot/bench/suite.hpp"

namespace {

using namespace revroot;
using namespace revroot::bench;
using expr::parse;
using expr::ProblemSpec;

SuiteSpec single_case(SuiteCase c) {
  SuiteSpec s;
  s.repetitions = 1;
  s.cases.push_back(std::move(c));
  return s;
}

std::vector<SuiteRow> paper_rows() {
  static const auto rows = run_suite(paper_tables_suite(1));
  return rows;
}

TEST(RunSuite, PaperSuiteRowOrder) {
  const auto rows = paper_rows();
  ASSERT_EQ(rows.size(), 27u);
  const char* ids[] = {"order2", "order3", "order4", "newton", "two-step", "halley", "chebyshev", "df4", "df8"};
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].method, ids[i % 9]) << i;
  EXPECT_EQ(rows[0].case_name, "atan-x0=-0.9");
  EXPECT_EQ(rows[9].case_name, "atan-x0=-1e6");
  EXPECT_EQ(rows[18].case_name, "sqrt-abs-x0=-1e-6");
}

TEST(RunSuite, AtanNearRootStepCounts) {
  const auto rows = paper_rows();
  // Paper: 5, 5, 4, 6 for orders 2-4 and Newton, 4 for two-step, 6 for
  // Chebyshev. The band allows for its unstated stopping rule.
  const double paper[] = {5, 5, 4, 6, 4};
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(row_status(rows[i]), "converged") << rows[i].method;
    EXPECT_NEAR(static_cast<double>(rows[i].steps), paper[i], 1.0) << rows[i].method;
  }
  EXPECT_NEAR(static_cast<double>(rows[6].steps), 6.0, 1.0);
}

TEST(RunSuite, AtanFarOut) {
  const auto rows = paper_rows();
  EXPECT_EQ(row_status(rows[9]), "converged");
  EXPECT_NEAR(static_cast<double>(rows[9].steps), 636630.0, 50.0);
  EXPECT_EQ(row_status(rows[12]), "diverged");
}

TEST(RunSuite, StepsMatchEngine) {
  const auto rows = paper_rows();
  const auto spec = paper_tables_suite(1);
  std::size_t i = 0;
  for (const auto& c : spec.cases) {
    for (const auto& m : c.methods) {
      const MethodKind kind = std::holds_alternative<ProposedOrder>(m)
                                  ? make_proposed(c.problem, std::get<ProposedOrder>(m).order)
                                  : MethodKind{std::get<Baseline>(m)};
      const auto r = iterate(c.problem, c.x0, kind, c.config);
      EXPECT_EQ(rows[i].steps, r.steps) << rows[i].case_name << " " << rows[i].method;
      EXPECT_EQ(rows[i].status, r.status);
      ++i;
    }
  }
}

TEST(RunSuite, Reproducible) {
  auto spec = paper_tables_suite(2);
  spec.cases.erase(spec.cases.begin() + 1);  // skip the long case
  const auto a = run_suite(spec);
  const auto b = run_suite(spec, {3});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].case_name, b[i].case_name);
    EXPECT_EQ(a[i].method, b[i].method);
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].steps, b[i].steps);
    EXPECT_EQ(a[i].x_final, b[i].x_final);
    EXPECT_EQ(a[i].residual, b[i].residual);
    EXPECT_EQ(a[i].coc, b[i].coc);
  }
}

TEST(RunSuite, EmptyMethodListGivesNoRows) {
  SuiteSpec s;
  s.repetitions = 1;
  s.cases.push_back({"empty", "", ProblemSpec(parse("x - 1")), 0.0, {}, {}});
  s.cases.push_back({"one", "", ProblemSpec(parse("x - 1")), 0.0, {Baseline::Newton}, {}});
  const auto rows = run_suite(s);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].case_name, "one");
}

TEST(RunSuite, SetupFailureIsRecordedNotThrown) {
  const auto rows =
      run_suite(single_case({"no-root", "", ProblemSpec(parse("atan(x)")), 0.5, {ProposedOrder{2}, Baseline::Newton}, {}}));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].status.has_value());
  EXPECT_EQ(row_status(rows[0]), "error");
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_EQ(row_status(rows[1]), "converged");
}

TEST(RunSuite, ValidatesSpec) {
  EXPECT_THROW(run_suite(SuiteSpec{}), std::invalid_argument);
  auto s = single_case({"c", "", ProblemSpec(parse("x")), 1.0, {Baseline::Newton}, {}});
  s.repetitions = 0;
  EXPECT_THROW(run_suite(s), std::invalid_argument);
}

TEST(RunSuite, FlagsConvergenceToAnotherRoot) {
  const auto rows = paper_rows();
  EXPECT_EQ(rows[18].at_known_root, true);
  EXPECT_EQ(rows[21].at_known_root, false);  // Newton settles on -16
}

TEST(MethodRequest, ParseAndName) {
  EXPECT_EQ(method_request_id(parse_method_request("order7")), "order7");
  EXPECT_EQ(method_request_id(parse_method_request("halley")), "halley");
  EXPECT_EQ(method_request_label(parse_method_request("order4")), "Fourth order");
  EXPECT_THROW(parse_method_request("order9"), std::invalid_argument);
  EXPECT_THROW(parse_method_request("order1"), std::invalid_argument);
  EXPECT_THROW(parse_method_request("secant"), std::invalid_argument);
}

TEST(BasinScan, NewtonOnAtanThreshold) {
  const ProblemSpec p(parse("atan(x)"), 0.0);
  const auto scan = basin_scan(p, Baseline::Newton, 1.0, 2.0, 11);
  ASSERT_EQ(scan.points.size(), 11u);
  for (const auto& pt : scan.points) {
    if (pt.x0 <= 1.3 + 1e-12) {
      EXPECT_EQ(pt.status, Status::Converged) << pt.x0;
    } else {
      EXPECT_EQ(pt.status, Status::Diverged) << pt.x0;
    }
  }
  ASSERT_TRUE(scan.largest_converged && scan.first_failure_beyond);
  EXPECT_NEAR(*scan.largest_converged, 1.3, 1e-12);
  EXPECT_NEAR(*scan.first_failure_beyond, 1.4, 1e-12);
  EXPECT_NEAR(scan.converged_fraction, 4.0 / 11.0, 1e-15);
}

TEST(BasinScan, ConvergedFractionShrinksPastThreshold) {
  const ProblemSpec p(parse("atan(x)"), 0.0);
  double previous = 1.0;
  for (int upper = 14; upper <= 40; upper += 2) {
    const double hi = upper / 10.0;
    const auto scan = basin_scan(p, Baseline::Newton, 0.0, hi, upper + 1);
    EXPECT_LE(scan.converged_fraction, previous) << hi;
    previous = scan.converged_fraction;
  }
}

TEST(BasinScan, ProposedOrderTwoConvergesEverywhere) {
  const ProblemSpec p(parse("atan(x)"), 0.0);
  const auto scan = basin_scan(p, make_proposed(p, 2), -1e6, 1e6, 21);
  EXPECT_EQ(scan.converged_fraction, 1.0);
  EXPECT_FALSE(scan.first_failure_beyond.has_value());
}

TEST(BasinScan, SingleSampleAndBadRanges) {
  const ProblemSpec p(parse("atan(x)"), 0.0);
  const auto scan = basin_scan(p, Baseline::Newton, 0.5, 0.5, 1);
  ASSERT_EQ(scan.points.size(), 1u);
  EXPECT_EQ(scan.points[0].x0, 0.5);
  EXPECT_THROW(basin_scan(p, Baseline::Newton, 1.0, 0.0, 3), std::invalid_argument);
  EXPECT_THROW(basin_scan(p, Baseline::Newton, 0.0, 1.0, 0), std::invalid_argument);
}

}  // namespace
