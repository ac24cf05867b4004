#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "revroot/series/taylor_jet.hpp"

namespace revroot {

/// Highest method order the coefficient engine accepts. The coefficients
/// scale like g'(l)^-(2n-1), so conditioning degrades quickly beyond this.
inline constexpr int kMaxOrder = 8;

/// Derivatives g'(l), g''(l), ..., g^(m)(l) of g at a simple root l.
///
/// Entries are plain derivatives, not Taylor coefficients: `derivs()[0]` is
/// g'(l), `derivs()[1]` is g''(l). Factorials are applied where the values
/// are turned into series coefficients.
template <class Real>
class BasicDerivativeBundle {
 public:
  BasicDerivativeBundle(Real root, std::vector<Real> derivs) : root_(std::move(root)), derivs_(std::move(derivs)) {
    if (derivs_.empty()) {
      throw std::invalid_argument("derivative bundle needs at least g'(l)");
    }
    for (const Real& d : derivs_) {
      if (!detail::is_finite(d)) throw std::invalid_argument("derivative bundle entries must be finite");
    }
    if (derivs_.front() == Real(0)) {
      throw std::invalid_argument("g'(l) = 0: multiple root, the method is undefined");
    }
  }

  const Real& root() const noexcept { return root_; }
  /// Highest derivative order held.
  int order() const noexcept { return static_cast<int>(derivs_.size()); }
  std::span<const Real> derivs() const noexcept { return derivs_; }
  /// g^(k)(l) for 1 <= k <= order().
  const Real& derivative(int k) const { return derivs_.at(static_cast<std::size_t>(k - 1)); }

 private:
  Real root_;
  std::vector<Real> derivs_;
};

using DerivativeBundle = BasicDerivativeBundle<double>;

/// Correction coefficients c_1..c_{n-1} of an order-n step
///   x+ = x - sum_k c_k g(x)^k.
template <class Real>
class BasicMethodCoefficients {
 public:
  BasicMethodCoefficients(int order, std::vector<Real> c) : order_(order), c_(std::move(c)) {
    if (order_ < 2) throw std::invalid_argument("method order must be at least 2");
    if (c_.size() != static_cast<std::size_t>(order_ - 1)) {
      throw std::invalid_argument("order-" + std::to_string(order_) + " method needs " +
                                  std::to_string(order_ - 1) + " coefficients");
    }
    for (const Real& v : c_) {
      if (!detail::is_finite(v)) throw std::invalid_argument("method coefficients must be finite");
    }
  }

  int order() const noexcept { return order_; }
  std::span<const Real> c() const noexcept { return c_; }
  /// c_k, 1-based as in the update formula.
  const Real& operator[](int k) const { return c_.at(static_cast<std::size_t>(k - 1)); }

  friend bool operator==(const BasicMethodCoefficients&, const BasicMethodCoefficients&) = default;

 private:
  int order_;
  std::vector<Real> c_;
};

using MethodCoefficients = BasicMethodCoefficients<double>;

namespace detail {

template <class Real>
void check_order_request(const BasicDerivativeBundle<Real>& bundle, int order, int max_order) {
  if (order < 2 || order > max_order) {
    throw std::invalid_argument("method order " + std::to_string(order) + " outside supported range [2, " +
                                std::to_string(max_order) + "]");
  }
  if (bundle.order() < order - 1) {
    throw std::invalid_argument("order-" + std::to_string(order) + " method needs derivatives up to g^(" +
                                std::to_string(order - 1) + ")(l), bundle holds " +
                                std::to_string(bundle.order()));
  }
}

}  // namespace detail

/// Coefficients of the order-n method from derivatives of g at its root.
///
/// Writing g(l + e) = sum_{k>=1} a_k e^k with a_k = g^(k)(l)/k!, the error
/// e of an iterate is recovered from y = g(x) by the inverse series
/// e = sum_k c_k y^k. Truncating after c_{n-1} leaves an O(e^n) error, so
/// the c_k are the Taylor coefficients of g^-1 about 0. They are extracted
/// one at a time: the y^k coefficient of sum_j a_j E(y)^j must vanish,
/// and only the j = 1 term involves c_k.
template <class Real>
BasicMethodCoefficients<Real> revert_series(const BasicDerivativeBundle<Real>& bundle, int order) {
  detail::check_order_request(bundle, order, kMaxOrder);
  const int n = order - 1;

  std::vector<Real> a(static_cast<std::size_t>(n) + 1, Real(0));
  Real factorial(1);
  for (int k = 1; k <= n; ++k) {
    factorial *= Real(k);
    a[k] = bundle.derivative(k) / factorial;
  }

  // inverse[k] = c_k; inverse[0] = 0 so it doubles as the jet of E(y).
  std::vector<Real> inverse(static_cast<std::size_t>(n) + 1, Real(0));
  inverse[1] = Real(1) / a[1];
  for (int k = 2; k <= n; ++k) {
    const BasicTaylorJet<Real> e(Real(0), std::vector<Real>(inverse.begin(), inverse.begin() + k + 1));
    BasicTaylorJet<Real> power = e;
    Real residual(0);
    for (int j = 2; j <= k; ++j) {
      power = power * e;
      residual += a[j] * power[k];
    }
    inverse[k] = -residual / a[1];
  }
  inverse.erase(inverse.begin());
  return BasicMethodCoefficients<Real>(order, std::move(inverse));
}

/// Hand-derived coefficients for orders 2 to 4:
///   c1 = 1/g', c2 = -g''/(2 g'^3), c3 = (3 g''^2 - g' g''')/(6 g'^5).
template <class Real>
BasicMethodCoefficients<Real> closed_form_coefficients(const BasicDerivativeBundle<Real>& bundle, int order) {
  if (order < 2 || order > 4) {
    throw std::invalid_argument("closed-form coefficients exist only for orders 2, 3 and 4");
  }
  detail::check_order_request(bundle, order, 4);
  const Real& d1 = bundle.derivative(1);
  std::vector<Real> c{Real(1) / d1};
  if (order >= 3) {
    const Real& d2 = bundle.derivative(2);
    c.push_back(-d2 / (Real(2) * d1 * d1 * d1));
  }
  if (order >= 4) {
    const Real& d2 = bundle.derivative(2);
    const Real& d3 = bundle.derivative(3);
    const Real d1_5 = d1 * d1 * d1 * d1 * d1;
    c.push_back((Real(3) * d2 * d2 - d1 * d3) / (Real(6) * d1_5));
  }
  return BasicMethodCoefficients<Real>(order, std::move(c));
}

/// Correction constants of the fixed-point form
///   x+ = f(x) + alpha (f(x) - x) + beta (f(x) - x)^2 + gamma (f(x) - x)^3
/// with f = g + x. beta and gamma are present when the bundle carries g''
/// and g''' respectively.
template <class Real>
struct BasicFixedPointCorrection {
  Real alpha;
  std::optional<Real> beta;
  std::optional<Real> gamma;
};

using FixedPointCorrection = BasicFixedPointCorrection<double>;

template <class Real>
BasicFixedPointCorrection<Real> fspace_correction(const BasicDerivativeBundle<Real>& bundle) {
  const Real f1 = bundle.derivative(1) + Real(1);
  const Real gap = Real(1) - f1;  // equals -g'(l)
  if (gap == Real(0)) throw std::domain_error("f'(l) = 1: correction constants are undefined");
  BasicFixedPointCorrection<Real> out{f1 / gap, std::nullopt, std::nullopt};
  if (bundle.order() >= 2) {
    const Real& f2 = bundle.derivative(2);
    out.beta = -f2 / (Real(2) * gap * gap * gap);
    if (bundle.order() >= 3) {
      const Real& f3 = bundle.derivative(3);
      const Real gap5 = gap * gap * gap * gap * gap;
      out.gamma = (f3 * gap + Real(3) * f2 * f2) / (Real(6) * gap5);
    }
  }
  return out;
}

/// One update in fixed-point form given x and g(x). Terms whose constants
/// are absent are skipped, so a bundle with only g' gives the order-2 step.
template <class Real>
Real fspace_update(const Real& x, const Real& gx, const BasicFixedPointCorrection<Real>& k) {
  const Real fx = gx + x;
  Real next = fx + k.alpha * gx;
  if (k.beta) next += *k.beta * gx * gx;
  if (k.gamma) next += *k.gamma * gx * gx * gx;
  return next;
}

}  // namespace revroot
