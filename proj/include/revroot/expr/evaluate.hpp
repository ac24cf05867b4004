#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

#include "revroot/expr/expression.hpp"
#include "revroot/series/taylor_jet.hpp"

namespace revroot::expr {

/// A jet could not be formed at the requested point. `node()` is the
/// canonical text of the offending subexpression.
class EvaluationError : public std::domain_error {
 public:
  EvaluationError(std::string node, const std::string& reason)
      : std::domain_error(node + ": " + reason), node_(std::move(node)) {}
  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

namespace detail {

/// Integer power by repeated squaring. Jets use the same multiplication
/// order, so degree-0 jets agree bit-for-bit with scalar evaluation.
template <class T>
T integer_power(const T& x, int p, const T& one) {
  if (p < 0) return one / integer_power(x, -p, one);
  T result = one;
  T base = x;
  for (unsigned e = static_cast<unsigned>(p); e != 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

inline bool is_small_integer(double p) { return p == std::floor(p) && std::fabs(p) <= 1 << 20; }

template <class Real>
Real scalar(const Node& n, const Real& x);

template <class Real>
Real scalar_call(Function f, const Real& a) {
  using std::abs;
  using std::atan;
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  using std::tan;
  switch (f) {
    case Function::Sin: return sin(a);
    case Function::Cos: return cos(a);
    case Function::Tan: return tan(a);
    case Function::Atan: return atan(a);
    case Function::Exp: return exp(a);
    case Function::Ln: return log(a);
    case Function::Sqrt: return sqrt(a);
    case Function::Abs: return abs(a);
  }
  return a;
}

template <class Real>
Real scalar(const Node& n, const Real& x) {
  return std::visit(
      [&x](const auto& k) -> Real {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Constant>) {
          return Real(k.value);
        } else if constexpr (std::is_same_v<K, Variable>) {
          return x;
        } else if constexpr (std::is_same_v<K, Negate>) {
          return -scalar(*k.operand, x);
        } else if constexpr (std::is_same_v<K, Call>) {
          return scalar_call(k.function, scalar(*k.argument, x));
        } else {
          const Real a = scalar(*k.lhs, x);
          switch (k.op) {
            case BinaryOp::Add: return a + scalar(*k.rhs, x);
            case BinaryOp::Sub: return a - scalar(*k.rhs, x);
            case BinaryOp::Mul: return a * scalar(*k.rhs, x);
            case BinaryOp::Div: return a / scalar(*k.rhs, x);
            case BinaryOp::Pow: {
              const double p = std::get<Constant>(k.rhs->kind).value;
              if (is_small_integer(p)) return integer_power(a, static_cast<int>(p), Real(1));
              using std::pow;
              return pow(a, Real(p));
            }
          }
          return a;
        }
      },
      n.kind);
}

template <class Real>
class JetEvaluator {
 public:
  JetEvaluator(Real point, int degree) : point_(std::move(point)), degree_(degree) {}

  BasicTaylorJet<Real> operator()(const Node& n) const {
    try {
      return visit(n);
    } catch (const EvaluationError&) {
      throw;
    } catch (const JetDomainError& e) {
      throw EvaluationError(to_string(n), e.what());
    }
  }

 private:
  using Jet = BasicTaylorJet<Real>;

  Jet visit(const Node& n) const {
    return std::visit(
        [this, &n](const auto& k) -> Jet {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, Constant>) {
            return Jet::constant(point_, Real(k.value), degree_);
          } else if constexpr (std::is_same_v<K, Variable>) {
            return Jet::variable(point_, degree_);
          } else if constexpr (std::is_same_v<K, Negate>) {
            return -(*this)(*k.operand);
          } else if constexpr (std::is_same_v<K, Call>) {
            return call(n, k.function, (*this)(*k.argument));
          } else {
            return binary(n, k);
          }
        },
        n.kind);
  }

  Jet call(const Node& n, Function f, const Jet& a) const {
    const Real& a0 = a[0];
    switch (f) {
      case Function::Sin: return sin(a);
      case Function::Cos: return cos(a);
      case Function::Tan: return tan(a);
      case Function::Atan: return atan(a);
      case Function::Exp: return exp(a);
      case Function::Ln:
        if (!(a0 > Real(0))) throw EvaluationError(to_string(n), "argument is not positive");
        return log(a);
      case Function::Sqrt:
        if (a0 < Real(0)) throw EvaluationError(to_string(n), "argument is negative");
        if (a0 == Real(0)) {
          if (degree_ == 0) return a;
          throw EvaluationError(to_string(n), "not differentiable where the argument is 0");
        }
        return sqrt(a);
      case Function::Abs:
        if (a0 == Real(0) && degree_ > 0) {
          throw EvaluationError(to_string(n), "not differentiable where the argument is 0");
        }
        return abs(a);
    }
    return a;
  }

  Jet binary(const Node& n, const Binary& b) const {
    const Jet lhs = (*this)(*b.lhs);
    if (b.op == BinaryOp::Pow) {
      const double p = std::get<Constant>(b.rhs->kind).value;
      const Real& base = lhs[0];
      if (is_small_integer(p)) {
        if (p < 0 && base == Real(0)) throw EvaluationError(to_string(n), "negative power of 0");
        return integer_power(lhs, static_cast<int>(p), Jet::constant(point_, Real(1), degree_));
      }
      if (base < Real(0)) throw EvaluationError(to_string(n), "non-integer power of a negative base");
      if (base == Real(0)) {
        if (degree_ == 0 && p > 0) return lhs;
        throw EvaluationError(to_string(n), "not differentiable where the base is 0");
      }
      return pow(lhs, Real(p));
    }
    const Jet rhs = (*this)(*b.rhs);
    switch (b.op) {
      case BinaryOp::Add: return lhs + rhs;
      case BinaryOp::Sub: return lhs - rhs;
      case BinaryOp::Mul: return lhs * rhs;
      case BinaryOp::Div:
        if (rhs[0] == Real(0)) throw EvaluationError(to_string(n), "division by zero");
        return lhs / rhs;
      case BinaryOp::Pow: break;
    }
    return lhs;
  }

  Real point_;
  int degree_;
};

}  // namespace detail

/// Plain evaluation g(x). Domain violations follow IEEE semantics (NaN or
/// infinities) instead of throwing, so iteration drivers can classify them.
template <class Real>
Real evaluate(const Expression& e, const Real& x) {
  return detail::scalar(e.root(), x);
}

/// Truncated Taylor expansion of the expression about `point`.
///
/// Throws EvaluationError naming the offending subexpression when a
/// derivative does not exist there (abs or sqrt at 0, division by 0) or the
/// point is outside a function's domain.
template <class Real>
BasicTaylorJet<Real> eval_jet(const Expression& e, const Real& point, int degree) {
  if (degree < 0) throw std::invalid_argument("jet degree must be non-negative");
  return detail::JetEvaluator<Real>(point, degree)(e.root());
}

}  // namespace revroot::expr
