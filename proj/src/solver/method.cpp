#include "revroot/solver/method.hpp"

#include <array>
#include <utility>

namespace revroot {

namespace {

struct BaselineInfo {
  Baseline method;
  std::string_view id;
  std::string_view label;
  int derivative_order;
  int evaluations;
  int convergence_order;
};

constexpr std::array<BaselineInfo, 6> kBaselines{{
    {Baseline::Newton, "newton", "Newton-Raphson", 1, 2, 2},
    {Baseline::TwoStepNewton, "two-step", "Newton two-step", 1, 3, 3},
    {Baseline::Halley, "halley", "Halley", 2, 3, 3},
    {Baseline::Chebyshev, "chebyshev", "Chebyshev", 2, 3, 3},
    {Baseline::KungTraubDF4, "df4", "Derivative free fourth order", 0, 3, 4},
    {Baseline::KungTraubDF8, "df8", "Derivative free eighth order", 0, 4, 8},
}};

const BaselineInfo& info(Baseline b) noexcept {
  for (const auto& i : kBaselines) {
    if (i.method == b) return i;
  }
  return kBaselines.front();
}

constexpr std::array<std::string_view, 9> kOrderWords{"",       "",      "Second", "Third", "Fourth",
                                                      "Fifth", "Sixth", "Seventh", "Eighth"};

}  // namespace

std::string_view baseline_id(Baseline b) noexcept { return info(b).id; }
std::string_view baseline_label(Baseline b) noexcept { return info(b).label; }
int baseline_derivative_order(Baseline b) noexcept { return info(b).derivative_order; }
int baseline_evaluations_per_step(Baseline b) noexcept { return info(b).evaluations; }
int baseline_convergence_order(Baseline b) noexcept { return info(b).convergence_order; }

std::optional<Baseline> baseline_from_id(std::string_view id) noexcept {
  for (const auto& i : kBaselines) {
    if (i.id == id) return i.method;
  }
  return std::nullopt;
}

std::string proposed_id(int order) { return "order" + std::to_string(order); }

std::string proposed_label(int order) {
  if (order >= 2 && order < static_cast<int>(kOrderWords.size())) {
    return std::string(kOrderWords[static_cast<std::size_t>(order)]) + " order";
  }
  return "Order " + std::to_string(order);
}

}  // namespace revroot
