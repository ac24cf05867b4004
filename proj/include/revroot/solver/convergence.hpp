#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>

namespace revroot {

/// Errors at or below this are treated as unresolved when estimating the
/// convergence order: a few hundred ulps of max(1, |root|).
template <class Real>
Real default_coc_noise_floor(const Real& root) {
  using std::abs;
  const Real scale = abs(root) > Real(1) ? Real(abs(root)) : Real(1);
  return Real(64) * std::numeric_limits<Real>::epsilon() * scale;
}

/// Computational order of convergence ln(e_{k+1}/e_k) / ln(e_k/e_{k-1})
/// from the last triple of iterates whose errors e_i = |x_i - root| are all
/// above `noise_floor` and pairwise distinct. Returns nullopt when no such
/// triple exists (for instance once the errors reach rounding level).
template <class Real>
std::optional<double> estimate_coc(std::span<const Real> trace, const Real& root, const Real& noise_floor) {
  using std::abs;
  using std::log;
  if (trace.size() < 4) throw std::invalid_argument("convergence order needs at least 4 iterates");
  auto error = [&](std::size_t i) { return Real(abs(trace[i] - root)); };
  for (std::size_t k = trace.size() - 1; k >= 2; --k) {
    const Real e2 = error(k);
    const Real e1 = error(k - 1);
    const Real e0 = error(k - 2);
    if (!(e0 > noise_floor && e1 > noise_floor && e2 > noise_floor)) continue;
    if (e0 == e1 || e1 == e2) continue;
    const Real order = log(e2 / e1) / log(e1 / e0);
    const double value = static_cast<double>(order);
    if (std::isfinite(value)) return value;
  }
  return std::nullopt;
}

template <class Real>
std::optional<double> estimate_coc(std::span<const Real> trace, const Real& root) {
  return estimate_coc(trace, root, default_coc_noise_floor(root));
}

/// Kung-Traub efficiency index n^(1/q) for order n with q evaluations per step.
inline double efficiency_index(int order, int evals_per_step) {
  if (order < 1 || evals_per_step < 1) {
    throw std::invalid_argument("efficiency index needs order >= 1 and evaluations >= 1");
  }
  return std::pow(static_cast<double>(order), 1.0 / static_cast<double>(evals_per_step));
}

}  // namespace revroot
