#include "revroot/expr/problem.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <string>

#include "revroot/expr/evaluate.hpp"

namespace revroot::expr {

struct ProblemSpec::Cache {
  std::mutex mutex;
  std::vector<double> derivs;  // g'(l), g''(l), ... computed so far
  int jet_evaluations = 0;
};

ProblemSpec::ProblemSpec(Expression g)
    : g_(std::move(g)), source_(DerivativeSource::AutoJet), cache_(std::make_shared<Cache>()) {}

ProblemSpec::ProblemSpec(Expression g, double root)
    : g_(std::move(g)), root_(root), source_(DerivativeSource::AutoJet), cache_(std::make_shared<Cache>()) {
  if (!std::isfinite(root)) throw std::invalid_argument("root must be finite");
}

ProblemSpec::ProblemSpec(Expression g, double root, std::vector<double> explicit_derivs)
    : g_(std::move(g)),
      root_(root),
      source_(DerivativeSource::Explicit),
      explicit_derivs_(std::move(explicit_derivs)),
      cache_(std::make_shared<Cache>()) {
  if (!std::isfinite(root)) throw std::invalid_argument("root must be finite");
  if (explicit_derivs_.empty()) throw std::invalid_argument("explicit derivative list is empty");
}

int ProblemSpec::jet_evaluations() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->jet_evaluations;
}

DerivativeBundle bundle_at_root(const ProblemSpec& p, int m) {
  if (m < 1) throw std::invalid_argument("bundle needs at least the first derivative");
  if (!p.root_) throw std::invalid_argument("problem has no root; derivatives at the root are unavailable");
  const double l = *p.root_;

  if (p.source_ == DerivativeSource::Explicit) {
    if (static_cast<int>(p.explicit_derivs_.size()) < m) {
      throw std::invalid_argument("need " + std::to_string(m) + " explicit derivatives, got " +
                                  std::to_string(p.explicit_derivs_.size()));
    }
    return DerivativeBundle(l, std::vector<double>(p.explicit_derivs_.begin(), p.explicit_derivs_.begin() + m));
  }

  std::lock_guard lock(p.cache_->mutex);
  auto& cached = p.cache_->derivs;
  if (static_cast<int>(cached.size()) < m) {
    // One differentiation to the highest supported order serves every
    // later method construction.
    const int degree = std::max(m, kMaxOrder - 1);
    const TaylorJet jet = eval_jet(p.g_, l, degree);
    ++p.cache_->jet_evaluations;
    const double gl = jet.value();
    if (!(std::fabs(gl) <= kRootSanityTolerance * std::max(1.0, std::fabs(l)))) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "l = " << l << " is not a root: |g(l)| = " << std::fabs(gl);
      throw RootSanityError(msg.str());
    }
    cached.clear();
    for (int k = 1; k <= degree; ++k) cached.push_back(jet.derivative(k));
  }
  return DerivativeBundle(l, std::vector<double>(cached.begin(), cached.begin() + m));
}

}  // namespace revroot::expr
