#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "revroot/series/reversion.hpp"

namespace revroot {

/// Classic methods that differentiate (or sample) g at every iterate.
enum class Baseline {
  Newton,
  TwoStepNewton,
  Halley,
  Chebyshev,
  /// Kung-Traub derivative-free inverse-interpolation method, order 4.
  KungTraubDF4,
  /// Kung-Traub derivative-free inverse-interpolation method, order 8.
  KungTraubDF8,
};

/// One g evaluation per step; corrections from derivatives at the root.
template <class Real>
struct BasicProposed {
  BasicMethodCoefficients<Real> coeffs;
};

template <class Real>
using BasicMethodKind = std::variant<BasicProposed<Real>, Baseline>;

using Proposed = BasicProposed<double>;
using MethodKind = BasicMethodKind<double>;

/// Short identifier used in CSV output and on the command line
/// ("newton", "two-step", "halley", "chebyshev", "df4", "df8").
std::string_view baseline_id(Baseline b) noexcept;
std::optional<Baseline> baseline_from_id(std::string_view id) noexcept;
/// Human-readable name used in markdown tables.
std::string_view baseline_label(Baseline b) noexcept;

/// Highest derivative of g the baseline needs at each iterate.
int baseline_derivative_order(Baseline b) noexcept;
/// Functional evaluations (g and derivatives) per step.
int baseline_evaluations_per_step(Baseline b) noexcept;
int baseline_convergence_order(Baseline b) noexcept;

/// "order<n>" for proposed methods.
std::string proposed_id(int order);
std::string proposed_label(int order);

template <class Real>
std::string method_id(const BasicMethodKind<Real>& m) {
  if (const auto* p = std::get_if<BasicProposed<Real>>(&m)) return proposed_id(p->coeffs.order());
  return std::string(baseline_id(std::get<Baseline>(m)));
}

template <class Real>
std::string method_label(const BasicMethodKind<Real>& m) {
  if (const auto* p = std::get_if<BasicProposed<Real>>(&m)) return proposed_label(p->coeffs.order());
  return std::string(baseline_label(std::get<Baseline>(m)));
}

}  // namespace revroot
