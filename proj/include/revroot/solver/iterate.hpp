#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "revroot/expr/problem.hpp"
#include "revroot/solver/convergence.hpp"
#include "revroot/solver/method.hpp"
#include "revroot/solver/steps.hpp"

namespace revroot {

/// Stopping rule: an update x -> x+ converges when
///   |x+ - x| <= atol + rtol |x+|   or   |g(x+)| <= ftol.
/// The run diverges when an iterate is non-finite or exceeds x_max.
struct IterationConfig {
  double atol = 1e-13;
  double rtol = 1e-13;
  /// Residual test. The default 0 fires only on an exact zero of g; any
  /// looser value ends runs before the step test would (Newton on atan
  /// from -0.9 reaches |g| = 3.8e-13 one update early).
  double ftol = 0.0;
  std::int64_t max_steps = 2'000'000;
  double x_max = 1e12;
  /// Keep every iterate (x0 included) in the report.
  bool record_trace = false;

  void validate() const;
};

enum class Status { Converged, Diverged, MaxSteps, NumericalFailure };

std::string_view status_name(Status s) noexcept;

template <class Real>
struct BasicIterationReport {
  Status status = Status::MaxSteps;
  /// Accepted updates.
  std::int64_t steps = 0;
  /// Last accepted iterate.
  Real x_final{};
  /// |g(x_final)|.
  Real residual{};
  /// g evaluations made by the run, including g(x0).
  std::int64_t g_evals = 0;
  /// Derivative evaluations made at iterates (one per derivative order).
  std::int64_t derivative_evals = 0;
  /// x0, x1, ... when IterationConfig::record_trace is set.
  std::vector<Real> trace;
  /// Empirical order of convergence, when the root is known and resolvable.
  std::optional<double> coc;
  /// Update index at which a numerical failure occurred.
  std::optional<std::int64_t> failure_step;
  std::chrono::nanoseconds wall_time{0};
};

using IterationReport = BasicIterationReport<double>;

/// Drives `method` from x0 until the stopping rule fires. `root`, when
/// given, is used only for the convergence-order estimate.
template <class Real>
BasicIterationReport<Real> iterate_objective(const BasicObjective<Real>& objective, const Real& x0,
                                             const BasicMethodKind<Real>& method, const IterationConfig& cfg,
                                             const std::optional<Real>& root = std::nullopt) {
  using std::abs;
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();

  BasicIterationReport<Real> report;
  CountingObjective<Real> f(objective);
  // The last few iterates are enough for the order estimate.
  constexpr std::size_t kTail = 8;
  std::deque<Real> tail;
  auto record = [&](const Real& x) {
    if (cfg.record_trace) report.trace.push_back(x);
    tail.push_back(x);
    if (tail.size() > kTail) tail.pop_front();
  };

  Real x = x0;
  Real gx = f.value(x);
  record(x);

  const Real atol(cfg.atol), rtol(cfg.rtol), ftol(cfg.ftol), x_max(cfg.x_max);
  if (!detail::is_finite(x) || !detail::is_finite(gx)) {
    report.status = Status::NumericalFailure;
    report.failure_step = 0;
  } else if (abs(gx) <= ftol) {
    report.status = Status::Converged;
  } else {
    report.status = Status::MaxSteps;
    for (std::int64_t step = 1; step <= cfg.max_steps; ++step) {
      const std::optional<Real> next = method_step(method, x, gx, f);
      if (!next) {
        report.status = Status::NumericalFailure;
        report.failure_step = step;
        break;
      }
      if (!detail::is_finite(*next) || abs(*next) > x_max) {
        report.status = Status::Diverged;
        break;
      }
      const Real dx = abs(Real(*next - x));
      x = *next;
      report.steps = step;
      record(x);
      gx = f.value(x);
      if (!detail::is_finite(gx)) {
        report.status = Status::NumericalFailure;
        report.failure_step = step;
        break;
      }
      if (dx <= atol + rtol * abs(x) || abs(gx) <= ftol) {
        report.status = Status::Converged;
        break;
      }
    }
  }

  report.x_final = x;
  report.residual = abs(gx);
  report.g_evals = f.g_evals();
  report.derivative_evals = f.derivative_evals();
  if (root && tail.size() >= 4) {
    const std::vector<Real> last(tail.begin(), tail.end());
    report.coc = estimate_coc<Real>(last, *root);
  }
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
  return report;
}

/// Objective backed by an expression: scalar evaluation for g, Taylor jets
/// for derivatives at iterates.
Objective make_objective(const expr::Expression& g);

/// Proposed order-n method for a problem with a known root; derivatives at
/// the root come from the problem's (cached) bundle.
MethodKind make_proposed(const expr::ProblemSpec& p, int order);

/// Solve `p` from x0. The report's COC uses the problem's root if it has one.
IterationReport iterate(const expr::ProblemSpec& p, double x0, const MethodKind& method,
                        const IterationConfig& cfg = {});

}  // namespace revroot
