// Command-line front end: solve, coeffs, bench and basin subcommands.
//
// Exit codes: 0 on success (solve: converged), 2 when a solve ran but did
// not converge, 1 on usage or input errors.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "revroot/bench/paper_tables.hpp"
#include "revroot/bench/report.hpp"
#include "revroot/bench/suite.hpp"
#include "revroot/bench/suite_file.hpp"
#include "revroot/expr/evaluate.hpp"
#include "revroot/expr/problem.hpp"
#include "revroot/series/reversion.hpp"
#include "revroot/solver/iterate.hpp"

namespace {

using revroot::bench::format_real;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemFlags {
  std::string expr;
  std::optional<double> root;
  std::vector<double> derivs;
  std::optional<int> order;
  std::string method;
};

struct ToleranceFlags {
  revroot::IterationConfig cfg;
};

void add_tolerance_flags(CLI::App* cmd, ToleranceFlags& t) {
  cmd->add_option("--atol", t.cfg.atol, "Absolute step tolerance")->capture_default_str();
  cmd->add_option("--rtol", t.cfg.rtol, "Relative step tolerance")->capture_default_str();
  cmd->add_option("--ftol", t.cfg.ftol, "Residual tolerance |g(x)| (0: exact zero only)")->capture_default_str();
  cmd->add_option("--max-steps", t.cfg.max_steps, "Maximum number of updates")->capture_default_str();
  cmd->add_option("--x-max", t.cfg.x_max, "Divergence bound on |x|")->capture_default_str();
}

void add_method_flags(CLI::App* cmd, ProblemFlags& p) {
  auto* order = cmd->add_option("--order", p.order, "Proposed method of this order (2-8)");
  auto* method = cmd->add_option("--method", p.method, "Baseline: newton, two-step, halley, chebyshev, df4, df8");
  order->excludes(method);
}

revroot::expr::Expression parse_expression(const std::string& text) {
  try {
    return revroot::expr::parse(text);
  } catch (const revroot::expr::ParseError& e) {
    throw UsageError("cannot parse --expr \"" + text + "\": " + e.what());
  }
}

revroot::expr::ProblemSpec make_problem(const ProblemFlags& f) {
  auto g = parse_expression(f.expr);
  if (!f.derivs.empty()) {
    if (!f.root) throw UsageError("--derivs needs --root");
    return revroot::expr::ProblemSpec(std::move(g), *f.root, f.derivs);
  }
  if (f.root) return revroot::expr::ProblemSpec(std::move(g), *f.root);
  return revroot::expr::ProblemSpec(std::move(g));
}

revroot::MethodKind make_method(const ProblemFlags& f, const revroot::expr::ProblemSpec& problem) {
  if (f.order) {
    if (!problem.root()) throw UsageError("--order needs --root (the known solution point)");
    return revroot::make_proposed(problem, *f.order);
  }
  if (f.method.empty()) throw UsageError("one of --order or --method is required");
  const auto b = revroot::baseline_from_id(f.method);
  if (!b) throw UsageError("unknown --method '" + f.method + "'");
  return *b;
}

int run_solve(const ProblemFlags& pf, const ToleranceFlags& tf, double x0, const std::string& format, bool trace) {
  const auto problem = make_problem(pf);
  const auto method = make_method(pf, problem);
  auto cfg = tf.cfg;
  cfg.record_trace = trace;
  const auto r = revroot::iterate(problem, x0, method, cfg);

  const std::string coc = r.coc ? format_real(*r.coc) : std::string();
  if (format == "csv") {
    std::cout << "method,status,steps,x_final,residual,g_evals,derivative_evals,coc\n"
              << revroot::method_id(method) << ',' << revroot::status_name(r.status) << ',' << r.steps << ','
              << format_real(r.x_final) << ',' << format_real(r.residual) << ',' << r.g_evals << ','
              << r.derivative_evals << ',' << coc << '\n';
  } else {
    std::cout << "method            " << revroot::method_label(method) << '\n'
              << "status            " << revroot::status_name(r.status) << '\n'
              << "steps             " << r.steps << '\n'
              << "x_final           " << format_real(r.x_final) << '\n'
              << "residual          " << format_real(r.residual) << '\n'
              << "g_evals           " << r.g_evals << '\n'
              << "derivative_evals  " << r.derivative_evals << '\n'
              << "coc               " << (coc.empty() ? "n/a" : coc) << '\n';
    if (r.failure_step) std::cout << "failure_step      " << *r.failure_step << '\n';
  }
  if (trace) {
    std::cout << "# trace\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i) std::cout << i << ' ' << format_real(r.trace[i]) << '\n';
  }
  return r.status == revroot::Status::Converged ? kExitOk : kExitNotConverged;
}

int run_coeffs(const ProblemFlags& pf) {
  if (!pf.order) throw UsageError("--order is required");
  const int order = *pf.order;
  if (order < 2 || order > revroot::kMaxOrder) {
    throw UsageError("--order must be between 2 and " + std::to_string(revroot::kMaxOrder));
  }
  std::optional<revroot::DerivativeBundle> bundle;
  if (!pf.derivs.empty()) {
    bundle.emplace(pf.root.value_or(0.0), pf.derivs);
  } else {
    if (pf.expr.empty()) throw UsageError("give --derivs, or --expr with --root");
    if (!pf.root) throw UsageError("--expr needs --root (the known solution point)");
    bundle = revroot::expr::bundle_at_root(revroot::expr::ProblemSpec(parse_expression(pf.expr), *pf.root), order - 1);
  }
  const auto coeffs = revroot::revert_series(*bundle, order);
  // -0 and 0 are the same coefficient; print the plain form.
  const auto show = [](double v) { return format_real(v + 0.0); };
  std::cout << "order " << order << '\n';
  for (int k = 1; k < order; ++k) std::cout << 'c' << k << " = " << show(coeffs[k]) << '\n';
  if (order <= 4) {
    const revroot::DerivativeBundle head(bundle->root(), std::vector<double>(bundle->derivs().begin(),
                                                                            bundle->derivs().begin() + (order - 1)));
    const auto k = revroot::fspace_correction(head);
    std::cout << "alpha = " << show(k.alpha) << '\n';
    if (k.beta) std::cout << "beta = " << show(*k.beta) << '\n';
    if (k.gamma) std::cout << "gamma = " << show(*k.gamma) << '\n';
  }
  return kExitOk;
}

int run_bench(bool paper_tables, const std::string& suite_path, const std::string& format,
              std::optional<int> repeat, int jobs) {
  revroot::bench::SuiteSpec spec = paper_tables ? revroot::bench::paper_tables_suite()
                                                : revroot::bench::load_suite_file(suite_path);
  if (repeat) spec.repetitions = *repeat;
  if (!format.empty()) {
    const auto f = revroot::bench::report_format_from_name(format);
    if (!f) throw UsageError("--format must be csv or markdown");
    spec.format = *f;
  }
  const auto rows = revroot::bench::run_suite(spec, {jobs});
  std::cout << revroot::bench::emit_report(rows, spec.format);
  return kExitOk;
}

int run_basin(const ProblemFlags& pf, const ToleranceFlags& tf, double from, double to, int samples,
              const std::string& format) {
  const auto problem = make_problem(pf);
  const auto method = make_method(pf, problem);
  const auto scan = revroot::bench::basin_scan(problem, method, from, to, samples, tf.cfg);
  if (format == "csv") {
    std::cout << "x0,status,steps\n";
    for (const auto& p : scan.points) {
      std::cout << format_real(p.x0) << ',' << revroot::status_name(p.status) << ',' << p.steps << '\n';
    }
    return kExitOk;
  }
  std::cout << "method " << revroot::method_label(method) << '\n';
  for (const auto& p : scan.points) {
    std::cout << "x0 = " << format_real(p.x0) << "  " << revroot::status_name(p.status) << "  steps = " << p.steps
              << '\n';
  }
  std::cout << "converged fraction: " << format_real(scan.converged_fraction) << '\n';
  if (scan.largest_converged) {
    std::cout << "largest converged |x0|: " << format_real(*scan.largest_converged) << '\n';
  } else {
    std::cout << "no start converged\n";
  }
  if (scan.largest_converged && scan.first_failure_beyond) {
    std::cout << "threshold bracketed between " << format_real(*scan.largest_converged) << " and "
              << format_real(*scan.first_failure_beyond) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root finding with one g evaluation per step, plus classic baselines"};
  app.require_subcommand(1);

  ProblemFlags solve_pf;
  ToleranceFlags solve_tf;
  double solve_x0 = 0.0;
  std::string solve_format = "table";
  bool solve_trace = false;
  auto* solve = app.add_subcommand("solve", "Solve g(x) = 0 from a starting point");
  solve->add_option("--expr", solve_pf.expr, "Expression in x, e.g. \"atan(x)\"")->required();
  solve->add_option("--root", solve_pf.root, "Known root l (needed by --order)");
  solve->add_option("--derivs", solve_pf.derivs, "Explicit g'(l),g''(l),... instead of differentiating")
      ->delimiter(',');
  add_method_flags(solve, solve_pf);
  solve->add_option("--x0", solve_x0, "Starting point")->required();
  solve->add_option("--format", solve_format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  solve->add_flag("--trace", solve_trace, "Print every iterate");
  add_tolerance_flags(solve, solve_tf);

  ProblemFlags coeffs_pf;
  auto* coeffs = app.add_subcommand("coeffs", "Print the correction coefficients of an order-n method");
  coeffs->add_option("--expr", coeffs_pf.expr, "Expression in x");
  coeffs->add_option("--root", coeffs_pf.root, "Known root l");
  coeffs->add_option("--derivs", coeffs_pf.derivs, "Explicit g'(l),g''(l),...")->delimiter(',');
  coeffs->add_option("--order", coeffs_pf.order, "Method order (2-8)")->required();

  bool bench_paper = false;
  std::string bench_suite;
  std::string bench_format;
  std::optional<int> bench_repeat;
  int bench_jobs = 1;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and print a report");
  auto* paper_flag = bench->add_flag("--paper-tables", bench_paper, "Run the built-in paper-tables suite");
  auto* suite_opt = bench->add_option("--suite", bench_suite, "Suite definition file");
  paper_flag->excludes(suite_opt);
  bench->add_option("--format", bench_format, "markdown or csv (overrides the suite)");
  bench->add_option("--repeat", bench_repeat, "Timing repetitions per method")->check(CLI::PositiveNumber);
  bench->add_option("--jobs", bench_jobs, "Cases run concurrently")->check(CLI::PositiveNumber);

  ProblemFlags basin_pf;
  ToleranceFlags basin_tf;
  double basin_from = 0.0, basin_to = 0.0;
  int basin_samples = 11;
  std::string basin_format = "table";
  auto* basin = app.add_subcommand("basin", "Scan starting points for convergence");
  basin->add_option("--expr", basin_pf.expr, "Expression in x")->required();
  basin->add_option("--root", basin_pf.root, "Known root l (needed by --order)");
  basin->add_option("--derivs", basin_pf.derivs, "Explicit g'(l),g''(l),...")->delimiter(',');
  add_method_flags(basin, basin_pf);
  basin->add_option("--from", basin_from, "First starting point")->required();
  basin->add_option("--to", basin_to, "Last starting point")->required();
  basin->add_option("--samples", basin_samples, "Number of starting points")->capture_default_str();
  basin->add_option("--format", basin_format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  add_tolerance_flags(basin, basin_tf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) return run_solve(solve_pf, solve_tf, solve_x0, solve_format, solve_trace);
    if (*coeffs) return run_coeffs(coeffs_pf);
    if (*bench) {
      if (!bench_paper && bench_suite.empty()) throw UsageError("give --paper-tables or --suite FILE");
      return run_bench(bench_paper, bench_suite, bench_format, bench_repeat, bench_jobs);
    }
    if (*basin) return run_basin(basin_pf, basin_tf, basin_from, basin_to, basin_samples, basin_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
