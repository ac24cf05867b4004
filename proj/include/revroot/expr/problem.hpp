#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "revroot/expr/expression.hpp"
#include "revroot/series/reversion.hpp"

namespace revroot::expr {

/// Where the derivatives of g at the root come from.
enum class DerivativeSource {
  /// Differentiate the expression at the root with Taylor jets.
  AutoJet,
  /// Use caller-supplied values g'(l), g''(l), ...
  Explicit,
};

class RootSanityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A root-finding problem: the function g, optionally the root l that the
/// proposed methods expand around, and where g's derivatives at l come from.
///
/// Copies share one bundle cache, so the jet at the root is computed at most
/// once per problem regardless of how many methods are built from it.
class ProblemSpec {
 public:
  /// Baseline-only problem: no root knowledge.
  explicit ProblemSpec(Expression g);
  /// Derivatives at `root` are obtained by differentiating `g`.
  ProblemSpec(Expression g, double root);
  /// Derivatives at `root` are the supplied values g'(l), g''(l), ...
  ProblemSpec(Expression g, double root, std::vector<double> explicit_derivs);

  const Expression& expression() const noexcept { return g_; }
  const std::optional<double>& root() const noexcept { return root_; }
  DerivativeSource source() const noexcept { return source_; }
  const std::vector<double>& explicit_derivs() const noexcept { return explicit_derivs_; }

  /// Number of times the expression was differentiated at the root.
  int jet_evaluations() const;

 private:
  friend DerivativeBundle bundle_at_root(const ProblemSpec& p, int m);

  struct Cache;

  Expression g_;
  std::optional<double> root_;
  DerivativeSource source_;
  std::vector<double> explicit_derivs_;
  std::shared_ptr<Cache> cache_;
};

/// |g(l)| must not exceed this multiple of max(1, |l|) for an auto-jet root.
inline constexpr double kRootSanityTolerance = 1e-9;

/// g'(l), ..., g^(m)(l) for the problem's root.
///
/// Auto-jet problems check that l is a root (RootSanityError otherwise) and
/// propagate EvaluationError when g is not differentiable there. Results are
/// cached on the problem; asking for fewer derivatives than already computed
/// never differentiates again.
DerivativeBundle bundle_at_root(const ProblemSpec& p, int m);

}  // namespace revroot::expr
