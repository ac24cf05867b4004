#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "revroot/series/reversion.hpp"
#include "revroot/solver/method.hpp"

namespace revroot {

/// The function whose root is sought.
template <class Real>
struct BasicObjective {
  std::function<Real(const Real&)> value;
  /// Writes g'(x), ..., g^(m)(x) into `out` (m = out.size()). Returns false
  /// when the derivatives do not exist at x. Only the derivative-based
  /// baselines call it; it may be left empty otherwise.
  std::function<bool(const Real&, std::span<Real>)> derivatives;
};

using Objective = BasicObjective<double>;

/// Wraps an objective and counts the evaluations methods request: one per
/// g value and one per derivative order.
template <class Real>
class CountingObjective {
 public:
  explicit CountingObjective(const BasicObjective<Real>& f) : f_(f) {}

  Real value(const Real& x) {
    ++g_evals_;
    return f_.value(x);
  }

  bool derivatives(const Real& x, std::span<Real> out) {
    derivative_evals_ += static_cast<std::int64_t>(out.size());
    return f_.derivatives && f_.derivatives(x, out);
  }

  std::int64_t g_evals() const noexcept { return g_evals_; }
  std::int64_t derivative_evals() const noexcept { return derivative_evals_; }

 private:
  const BasicObjective<Real>& f_;
  std::int64_t g_evals_ = 0;
  std::int64_t derivative_evals_ = 0;
};

namespace detail {

template <class Real>
std::optional<Real> finite_or_nothing(const Real& v) {
  if (!is_finite(v)) return std::nullopt;
  return v;
}

/// Updates whose result is NaN are failures; infinities are left for the
/// driver to classify as divergence.
template <class Real>
std::optional<Real> not_nan(const Real& v) {
  using std::isnan;
  if (isnan(v)) return std::nullopt;
  return v;
}

/// Newton-form inverse interpolation: given samples (t_i, x_i) of the
/// inverse function, evaluate the interpolating polynomial at t = 0.
template <class Real, std::size_t N>
std::optional<Real> inverse_interpolate_at_zero(const std::array<Real, N>& t, std::array<Real, N> x) {
  for (std::size_t level = 1; level < N; ++level) {
    for (std::size_t i = N - 1; i >= level; --i) {
      const Real dt = t[i] - t[i - level];
      if (dt == Real(0)) return std::nullopt;
      x[i] = (x[i] - x[i - 1]) / dt;
    }
  }
  Real acc = x[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * (-t[i]) + x[i];
  return not_nan(acc);
}

}  // namespace detail

/// x - sum_k c_k g(x)^k, evaluated by Horner in g(x). The caller supplies
/// g(x); the step itself evaluates nothing.
template <class Real>
std::optional<Real> proposed_step(const Real& x, const Real& gx, const BasicMethodCoefficients<Real>& coeffs) {
  const auto c = coeffs.c();
  Real correction = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) correction = correction * gx + c[k];
  return detail::finite_or_nothing(Real(x - correction * gx));
}

template <class Real>
std::optional<Real> newton_step(const Real& x, const Real& gx, CountingObjective<Real>& f) {
  std::array<Real, 1> d{};
  if (!f.derivatives(x, d) || d[0] == Real(0)) return std::nullopt;
  return detail::not_nan(Real(x - gx / d[0]));
}

template <class Real>
std::optional<Real> halley_step(const Real& x, const Real& gx, CountingObjective<Real>& f) {
  std::array<Real, 2> d{};
  if (!f.derivatives(x, d)) return std::nullopt;
  const Real denom = Real(2) * d[0] * d[0] - gx * d[1];
  if (denom == Real(0)) return std::nullopt;
  return detail::not_nan(Real(x - Real(2) * gx * d[0] / denom));
}

template <class Real>
std::optional<Real> chebyshev_step(const Real& x, const Real& gx, CountingObjective<Real>& f) {
  std::array<Real, 2> d{};
  if (!f.derivatives(x, d) || d[0] == Real(0)) return std::nullopt;
  const Real newton = gx / d[0];
  return detail::not_nan(Real(x - newton - newton * newton * d[1] / (Real(2) * d[0])));
}

/// Newton predictor followed by a corrector that reuses g'(x).
template <class Real>
std::optional<Real> two_step_newton_step(const Real& x, const Real& gx, CountingObjective<Real>& f) {
  std::array<Real, 1> d{};
  if (!f.derivatives(x, d) || d[0] == Real(0)) return std::nullopt;
  const Real y = x - gx / d[0];
  if (!detail::is_finite(y)) return detail::not_nan(y);
  const Real gy = f.value(y);
  return detail::not_nan(Real(y - gy / d[0]));
}

/// Kung-Traub (1974) derivative-free family with w = x + g(x): a Steffensen
/// (secant) point y, then inverse quadratic interpolation through
/// (g(x), x), (g(w), w), (g(y), y). Three g evaluations, order 4.
template <class Real>
std::optional<Real> df4_step(const Real& x, const Real& gx, CountingObjective<Real>& f) {
  const Real w = x + gx;
  // g(x) is below the spacing of x: no representable move is left.
  if (w == x) return x;
  const Real gw = f.value(w);
  if (gw == gx) return std::nullopt;
  const Real y = x - gx * (gx / (gw - gx));
  if (!detail::is_finite(y)) return detail::not_nan(y);
  const Real gy = f.value(y);
  if (gy == Real(0)) return y;
  return detail::inverse_interpolate_at_zero<Real, 3>({gx, gw, gy}, {x, w, y});
}

/// Eighth-order member of the same family: one more point z from df4_step,
/// then inverse cubic interpolation through all four samples.
template <class Real>
std::optional<Real> df8_step(const Real& x, const Real& gx, CountingObjective<Real>& f) {
  const Real w = x + gx;
  // g(x) is below the spacing of x: no representable move is left.
  if (w == x) return x;
  const Real gw = f.value(w);
  if (gw == gx) return std::nullopt;
  const Real y = x - gx * (gx / (gw - gx));
  if (!detail::is_finite(y)) return detail::not_nan(y);
  const Real gy = f.value(y);
  if (gy == Real(0)) return y;
  const auto z = detail::inverse_interpolate_at_zero<Real, 3>({gx, gw, gy}, {x, w, y});
  if (!z || !detail::is_finite(*z)) return z;
  const Real gz = f.value(*z);
  if (gz == Real(0)) return z;
  return detail::inverse_interpolate_at_zero<Real, 4>({gx, gw, gy, gz}, {x, w, y, *z});
}

/// One update of `method` from x, where gx = g(x) is already known.
template <class Real>
std::optional<Real> method_step(const BasicMethodKind<Real>& method, const Real& x, const Real& gx,
                                CountingObjective<Real>& f) {
  if (const auto* p = std::get_if<BasicProposed<Real>>(&method)) return proposed_step(x, gx, p->coeffs);
  switch (std::get<Baseline>(method)) {
    case Baseline::Newton: return newton_step(x, gx, f);
    case Baseline::TwoStepNewton: return two_step_newton_step(x, gx, f);
    case Baseline::Halley: return halley_step(x, gx, f);
    case Baseline::Chebyshev: return chebyshev_step(x, gx, f);
    case Baseline::KungTraubDF4: return df4_step(x, gx, f);
    case Baseline::KungTraubDF8: return df8_step(x, gx, f);
  }
  return std::nullopt;
}

}  // namespace revroot
