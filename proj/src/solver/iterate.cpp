#include "revroot/solver/iterate.hpp"

#include <cmath>

#include "revroot/expr/evaluate.hpp"

namespace revroot {

void IterationConfig::validate() const {
  if (!(atol > 0) || !(rtol > 0)) throw std::invalid_argument("step tolerances must be positive");
  if (!(ftol >= 0)) throw std::invalid_argument("residual tolerance must be non-negative");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  if (!(x_max > 0)) throw std::invalid_argument("divergence bound must be positive");
}

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::Converged: return "converged";
    case Status::Diverged: return "diverged";
    case Status::MaxSteps: return "max_steps";
    case Status::NumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

Objective make_objective(const expr::Expression& g) {
  Objective f;
  f.value = [g](const double& x) { return expr::evaluate(g, x); };
  f.derivatives = [g](const double& x, std::span<double> out) {
    try {
      const TaylorJet jet = expr::eval_jet(g, x, static_cast<int>(out.size()));
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = jet.derivative(static_cast<int>(k) + 1);
      return true;
    } catch (const std::domain_error&) {
      return false;
    }
  };
  return f;
}

MethodKind make_proposed(const expr::ProblemSpec& p, int order) {
  if (order < 2 || order > kMaxOrder) {
    throw std::invalid_argument("method order " + std::to_string(order) + " outside supported range [2, " +
                                std::to_string(kMaxOrder) + "]");
  }
  return Proposed{revert_series(expr::bundle_at_root(p, order - 1), order)};
}

IterationReport iterate(const expr::ProblemSpec& p, double x0, const MethodKind& method, const IterationConfig& cfg) {
  return iterate_objective<double>(make_objective(p.expression()), x0, method, cfg, p.root());
}

}  // namespace revroot
