#include "revroot/bench/paper_tables.hpp"

namespace revroot::bench {

namespace {

std::vector<MethodRequest> all_methods() {
  return {ProposedOrder{2},      ProposedOrder{3},  ProposedOrder{4},         Baseline::Newton,
          Baseline::TwoStepNewton, Baseline::Halley, Baseline::Chebyshev,      Baseline::KungTraubDF4,
          Baseline::KungTraubDF8};
}

}  // namespace

SuiteSpec paper_tables_suite(int repetitions) {
  const expr::ProblemSpec atan_problem(expr::parse("atan(x)"), 0.0);
  const expr::ProblemSpec sqrt_problem(expr::parse("sqrt(abs(x)) - 4"), 16.0);

  SuiteSpec spec;
  spec.repetitions = repetitions;
  spec.cases.push_back({"atan-x0=-0.9", "Comparison of methods for g(x) = atan(x) and x0 = -0.9", atan_problem, -0.9,
                        all_methods(), {}});
  spec.cases.push_back({"atan-x0=-1e6", "Comparison of methods for g(x) = atan(x) and x0 = -1e6", atan_problem, -1e6,
                        all_methods(), {}});
  spec.cases.push_back({"sqrt-abs-x0=-1e-6", "Results of the methods for g(x) = sqrt(|x|) - 4 and x0 = -1e-6",
                        sqrt_problem, -1e-6, all_methods(), {}});
  return spec;
}

}  // namespace revroot::bench
