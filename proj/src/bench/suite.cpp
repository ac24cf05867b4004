#include "revroot/bench/suite.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <stdexcept>

namespace revroot::bench {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double median_us(std::vector<std::chrono::nanoseconds> times) {
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  const double ns = times.size() % 2 == 1 ? static_cast<double>(times[mid].count())
                                          : 0.5 * static_cast<double>(times[mid - 1].count() + times[mid].count());
  return ns / 1000.0;
}

SuiteRow run_one(const SuiteCase& c, const MethodRequest& request, int repetitions) {
  SuiteRow row;
  row.case_name = c.name;
  row.case_title = c.title.empty() ? default_case_title(c.problem.expression(), c.x0) : c.title;
  row.method = method_request_id(request);
  row.label = method_request_label(request);

  MethodKind method = Baseline::Newton;
  try {
    if (const auto* p = std::get_if<ProposedOrder>(&request)) {
      method = make_proposed(c.problem, p->order);
    } else {
      method = std::get<Baseline>(request);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    return row;
  }

  const IterationReport report = iterate(c.problem, c.x0, method, c.config);
  std::vector<std::chrono::nanoseconds> times{report.wall_time};
  for (int r = 1; r < repetitions; ++r) times.push_back(iterate(c.problem, c.x0, method, c.config).wall_time);

  row.status = report.status;
  row.steps = report.steps;
  row.x_final = report.x_final;
  row.residual = report.residual;
  row.coc = report.coc;
  if (const auto root = c.problem.root()) {
    row.at_known_root = std::abs(report.x_final - *root) <= 1e-8 * std::max(1.0, std::abs(*root));
  }
  row.time_us = median_us(std::move(times));
  return row;
}

std::vector<SuiteRow> run_case(const SuiteCase& c, int repetitions) {
  std::vector<SuiteRow> rows;
  rows.reserve(c.methods.size());
  for (const auto& m : c.methods) rows.push_back(run_one(c, m, repetitions));
  return rows;
}

}  // namespace

MethodRequest parse_method_request(std::string_view id) {
  if (auto b = baseline_from_id(id)) return *b;
  if (id.starts_with("order")) {
    const std::string_view digits = id.substr(5);
    int order = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), order);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      if (order < 2 || order > kMaxOrder) {
        throw std::invalid_argument("method '" + std::string(id) + "': order must be in [2, " +
                                    std::to_string(kMaxOrder) + "]");
      }
      return ProposedOrder{order};
    }
  }
  throw std::invalid_argument("unknown method '" + std::string(id) +
                              "' (expected order2..order8, newton, two-step, halley, chebyshev, df4, df8)");
}

std::string method_request_id(const MethodRequest& m) {
  if (const auto* p = std::get_if<ProposedOrder>(&m)) return proposed_id(p->order);
  return std::string(baseline_id(std::get<Baseline>(m)));
}

std::string method_request_label(const MethodRequest& m) {
  if (const auto* p = std::get_if<ProposedOrder>(&m)) return proposed_label(p->order);
  return std::string(baseline_label(std::get<Baseline>(m)));
}

std::optional<ReportFormat> report_format_from_name(std::string_view name) noexcept {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  return std::nullopt;
}

void SuiteSpec::validate() const {
  if (cases.empty()) throw std::invalid_argument("suite has no cases");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  for (const auto& c : cases) {
    if (!std::isfinite(c.x0)) throw std::invalid_argument("case '" + c.name + "': x0 must be finite");
    c.config.validate();
  }
}

std::string row_status(const SuiteRow& row) {
  return row.status ? std::string(status_name(*row.status)) : std::string("error");
}

std::vector<SuiteRow> run_suite(const SuiteSpec& spec, const RunOptions& options) {
  spec.validate();
  std::vector<std::vector<SuiteRow>> per_case(spec.cases.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(options.jobs, 1));
  for (std::size_t first = 0; first < spec.cases.size(); first += jobs) {
    const std::size_t last = std::min(first + jobs, spec.cases.size());
    std::vector<std::future<std::vector<SuiteRow>>> pending;
    for (std::size_t i = first; i < last; ++i) {
      pending.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run_case,
                                   std::cref(spec.cases[i]), spec.repetitions));
    }
    for (std::size_t i = first; i < last; ++i) per_case[i] = pending[i - first].get();
  }
  std::vector<SuiteRow> rows;
  for (auto& r : per_case) rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return rows;
}

std::string default_case_title(const expr::Expression& g, double x0) {
  return "Comparison of methods for g(x) = " + expr::to_string(g) + " and x0 = " + shortest(x0);
}

BasinScan basin_scan(const expr::ProblemSpec& p, const MethodKind& method, double lo, double hi, int samples,
                     const IterationConfig& cfg) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("basin range needs finite lo <= hi");
  }
  if (samples < 1) throw std::invalid_argument("basin scan needs at least one sample");

  BasinScan scan;
  std::size_t converged = 0;
  for (int i = 0; i < samples; ++i) {
    const double x0 = samples == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    const IterationReport r = iterate(p, x0, method, cfg);
    scan.points.push_back({x0, r.status, r.steps});
    if (r.status == Status::Converged) {
      ++converged;
      const double a = std::fabs(x0);
      if (!scan.largest_converged || a > *scan.largest_converged) scan.largest_converged = a;
    }
  }
  scan.converged_fraction = static_cast<double>(converged) / static_cast<double>(samples);
  if (scan.largest_converged) {
    for (const auto& pt : scan.points) {
      const double a = std::fabs(pt.x0);
      if (pt.status != Status::Converged && a > *scan.largest_converged &&
          (!scan.first_failure_beyond || a < *scan.first_failure_beyond)) {
        scan.first_failure_beyond = a;
      }
    }
  }
  return scan;
}

}  // namespace revroot::bench
