#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "revroot/expr/problem.hpp"
#include "revroot/solver/iterate.hpp"
#include "revroot/solver/method.hpp"

namespace revroot::bench {

/// A proposed method is named by its order; coefficients are derived from
/// the case's problem when the case runs.
struct ProposedOrder {
  int order;
};

using MethodRequest = std::variant<ProposedOrder, Baseline>;

/// Accepts "order2" ... "order8" and the baseline ids ("newton", ...).
MethodRequest parse_method_request(std::string_view id);
std::string method_request_id(const MethodRequest& m);
std::string method_request_label(const MethodRequest& m);

struct SuiteCase {
  std::string name;
  /// Heading for the markdown report; defaults to a description of g and x0.
  std::string title;
  expr::ProblemSpec problem;
  double x0 = 0.0;
  std::vector<MethodRequest> methods;
  IterationConfig config;
};

enum class ReportFormat { Csv, Markdown };

std::optional<ReportFormat> report_format_from_name(std::string_view name) noexcept;

struct SuiteSpec {
  std::vector<SuiteCase> cases;
  /// Each (case, method) is solved this many times; the median wall time is
  /// reported.
  int repetitions = 100;
  ReportFormat format = ReportFormat::Markdown;

  /// Throws std::invalid_argument for an empty suite or repetitions < 1.
  void validate() const;
};

struct SuiteRow {
  std::string case_name;
  std::string case_title;
  std::string method;
  std::string label;
  /// Empty when the method could not be set up for the case (see `error`).
  std::optional<Status> status;
  std::string error;
  std::int64_t steps = 0;
  double x_final = 0.0;
  double residual = 0.0;
  /// Median wall time over the repetitions, in microseconds.
  double time_us = 0.0;
  std::optional<double> coc;
  /// Set when the case knows its root: whether x_final is that root
  /// (relative 1e-8). A run can converge to a different root.
  std::optional<bool> at_known_root;
};

/// "converged", "diverged", ..., or "error" for setup failures.
std::string row_status(const SuiteRow& row);

struct RunOptions {
  /// Cases solved concurrently.
  int jobs = 1;
};

/// One row per (case, method) in case order then method order. Failures of
/// individual methods are recorded in the row; only an invalid spec throws.
std::vector<SuiteRow> run_suite(const SuiteSpec& spec, const RunOptions& options = {});

std::string default_case_title(const expr::Expression& g, double x0);

struct BasinPoint {
  double x0;
  Status status;
  std::int64_t steps;
};

struct BasinScan {
  std::vector<BasinPoint> points;
  double converged_fraction = 0.0;
  /// Largest |x0| among converged starts.
  std::optional<double> largest_converged;
  /// Smallest |x0| above largest_converged that did not converge; with
  /// largest_converged it brackets the edge of the basin on the grid.
  std::optional<double> first_failure_beyond;
};

/// Solves from `samples` evenly spaced starting points in [lo, hi]
/// (a single sample starts at lo).
BasinScan basin_scan(const expr::ProblemSpec& p, const MethodKind& method, double lo, double hi, int samples,
                     const IterationConfig& cfg = {});

}  // namespace revroot::bench
