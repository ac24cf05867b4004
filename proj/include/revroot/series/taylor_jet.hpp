#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace revroot {

/// Raised when a jet operation leaves the domain where the result is a
/// finite truncated series (division by a series with zero constant term,
/// log of a non-positive value, overflow to a non-finite coefficient).
class JetDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

template <class Real>
bool is_finite(const Real& v) {
  using std::isfinite;
  return isfinite(v);
}

}  // namespace detail

/// Truncated Taylor expansion of a function of one variable about `anchor`.
///
/// Coefficients are normalized: `coeffs()[k] == f^(k)(anchor) / k!`. Binary
/// operations require both operands to share the same anchor and produce a
/// jet truncated to the smaller of the two degrees.
template <class Real>
class BasicTaylorJet {
 public:
  BasicTaylorJet(Real anchor, std::vector<Real> coeffs)
      : anchor_(std::move(anchor)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("TaylorJet needs at least one coefficient");
    }
    if (!detail::is_finite(anchor_)) {
      throw JetDomainError("TaylorJet anchor is not finite");
    }
    for (const Real& c : coeffs_) {
      if (!detail::is_finite(c)) {
        throw JetDomainError("TaylorJet coefficient is not finite");
      }
    }
  }

  static BasicTaylorJet constant(Real anchor, Real value, int degree) {
    std::vector<Real> c(static_cast<std::size_t>(checked_degree(degree)) + 1, Real(0));
    c[0] = std::move(value);
    return BasicTaylorJet(std::move(anchor), std::move(c));
  }

  /// Jet of the identity map x -> x at `anchor`.
  static BasicTaylorJet variable(Real anchor, int degree) {
    std::vector<Real> c(static_cast<std::size_t>(checked_degree(degree)) + 1, Real(0));
    c[0] = anchor;
    if (degree >= 1) c[1] = Real(1);
    return BasicTaylorJet(std::move(anchor), std::move(c));
  }

  const Real& anchor() const noexcept { return anchor_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Real> coeffs() const noexcept { return coeffs_; }
  const Real& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const Real& value() const noexcept { return coeffs_.front(); }

  /// Plain derivative f^(k)(anchor), i.e. k! times the stored coefficient.
  Real derivative(int k) const {
    Real d = (*this)[k];
    for (int i = 2; i <= k; ++i) d *= Real(i);
    return d;
  }

  BasicTaylorJet truncated(int degree) const {
    if (degree < 0 || degree > this->degree()) {
      throw std::invalid_argument("cannot truncate jet of degree " + std::to_string(this->degree()) +
                                  " to degree " + std::to_string(degree));
    }
    return BasicTaylorJet(anchor_, std::vector<Real>(coeffs_.begin(), coeffs_.begin() + degree + 1));
  }

 private:
  static int checked_degree(int degree) {
    if (degree < 0) throw std::invalid_argument("jet degree must be non-negative");
    return degree;
  }

  Real anchor_;
  std::vector<Real> coeffs_;
};

using TaylorJet = BasicTaylorJet<double>;

namespace detail {

template <class Real>
int shared_degree(const BasicTaylorJet<Real>& a, const BasicTaylorJet<Real>& b) {
  if (!(a.anchor() == b.anchor())) {
    throw std::invalid_argument("jet anchors differ");
  }
  return std::min(a.degree(), b.degree());
}

template <class Real>
std::vector<Real> zeros(int degree) {
  return std::vector<Real>(static_cast<std::size_t>(degree) + 1, Real(0));
}

}  // namespace detail

template <class Real>
BasicTaylorJet<Real> operator+(const BasicTaylorJet<Real>& a, const BasicTaylorJet<Real>& b) {
  const int n = detail::shared_degree(a, b);
  auto c = detail::zeros<Real>(n);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return {a.anchor(), std::move(c)};
}

template <class Real>
BasicTaylorJet<Real> operator-(const BasicTaylorJet<Real>& a, const BasicTaylorJet<Real>& b) {
  const int n = detail::shared_degree(a, b);
  auto c = detail::zeros<Real>(n);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return {a.anchor(), std::move(c)};
}

template <class Real>
BasicTaylorJet<Real> operator-(const BasicTaylorJet<Real>& a) {
  std::vector<Real> c(a.coeffs().begin(), a.coeffs().end());
  for (Real& v : c) v = -v;
  return {a.anchor(), std::move(c)};
}

template <class Real>
BasicTaylorJet<Real> operator*(const BasicTaylorJet<Real>& a, const BasicTaylorJet<Real>& b) {
  const int n = detail::shared_degree(a, b);
  auto c = detail::zeros<Real>(n);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= k; ++j) c[k] += a[j] * b[k - j];
  }
  return {a.anchor(), std::move(c)};
}

template <class Real>
BasicTaylorJet<Real> operator/(const BasicTaylorJet<Real>& a, const BasicTaylorJet<Real>& b) {
  const int n = detail::shared_degree(a, b);
  if (b[0] == Real(0)) {
    throw JetDomainError("division by a series with zero constant term");
  }
  auto q = detail::zeros<Real>(n);
  for (int k = 0; k <= n; ++k) {
    Real acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return {a.anchor(), std::move(q)};
}

template <class Real>
BasicTaylorJet<Real> operator+(const BasicTaylorJet<Real>& a, const Real& s) {
  std::vector<Real> c(a.coeffs().begin(), a.coeffs().end());
  c[0] += s;
  return {a.anchor(), std::move(c)};
}

template <class Real>
BasicTaylorJet<Real> operator+(const Real& s, const BasicTaylorJet<Real>& a) {
  return a + s;
}

template <class Real>
BasicTaylorJet<Real> operator-(const BasicTaylorJet<Real>& a, const Real& s) {
  return a + Real(-s);
}

template <class Real>
BasicTaylorJet<Real> operator-(const Real& s, const BasicTaylorJet<Real>& a) {
  return -a + s;
}

template <class Real>
BasicTaylorJet<Real> operator*(const BasicTaylorJet<Real>& a, const Real& s) {
  std::vector<Real> c(a.coeffs().begin(), a.coeffs().end());
  for (Real& v : c) v *= s;
  return {a.anchor(), std::move(c)};
}

template <class Real>
BasicTaylorJet<Real> operator*(const Real& s, const BasicTaylorJet<Real>& a) {
  return a * s;
}

template <class Real>
BasicTaylorJet<Real> operator/(const BasicTaylorJet<Real>& a, const Real& s) {
  if (s == Real(0)) throw JetDomainError("division of a jet by zero");
  std::vector<Real> c(a.coeffs().begin(), a.coeffs().end());
  for (Real& v : c) v /= s;
  return {a.anchor(), std::move(c)};
}

template <class Real>
BasicTaylorJet<Real> operator/(const Real& s, const BasicTaylorJet<Real>& a) {
  return BasicTaylorJet<Real>::constant(a.anchor(), s, a.degree()) / a;
}

/// Formal derivative d/dx of the expansion; the result has degree one less
/// (a degree-0 jet differentiates to the zero jet of degree 0).
template <class Real>
BasicTaylorJet<Real> differentiate(const BasicTaylorJet<Real>& a) {
  const int n = std::max(a.degree() - 1, 0);
  auto c = detail::zeros<Real>(n);
  for (int k = 0; k + 1 <= a.degree(); ++k) c[k] = Real(k + 1) * a[k + 1];
  return {a.anchor(), std::move(c)};
}

/// Antiderivative with the given constant term, truncated to `degree`.
template <class Real>
BasicTaylorJet<Real> integrate(const BasicTaylorJet<Real>& a, Real constant, int degree) {
  auto c = detail::zeros<Real>(degree);
  c[0] = std::move(constant);
  for (int k = 1; k <= degree && k - 1 <= a.degree(); ++k) c[k] = a[k - 1] / Real(k);
  return {a.anchor(), std::move(c)};
}

/// Composition outer(inner(x)). The outer jet must be expanded about the
/// value inner takes at its anchor; the result is expanded about inner's
/// anchor.
template <class Real>
BasicTaylorJet<Real> compose(const BasicTaylorJet<Real>& outer, const BasicTaylorJet<Real>& inner) {
  if (!(inner[0] == outer.anchor())) {
    throw std::invalid_argument("composition requires inner constant term to equal outer anchor");
  }
  const int n = std::min(outer.degree(), inner.degree());
  // Horner in the shifted inner series t = inner - inner[0], which has no
  // constant term, so each product stays exact to degree n.
  std::vector<Real> t(inner.coeffs().begin(), inner.coeffs().begin() + n + 1);
  t[0] = Real(0);
  const BasicTaylorJet<Real> shift(inner.anchor(), std::move(t));
  auto acc = BasicTaylorJet<Real>::constant(inner.anchor(), outer[n], n);
  for (int k = n - 1; k >= 0; --k) acc = acc * shift + outer[k];
  return acc;
}

template <class Real>
BasicTaylorJet<Real> exp(const BasicTaylorJet<Real>& a) {
  using std::exp;
  const int n = a.degree();
  auto b = detail::zeros<Real>(n);
  b[0] = exp(a[0]);
  for (int k = 1; k <= n; ++k) {
    Real acc(0);
    for (int j = 1; j <= k; ++j) acc += Real(j) * a[j] * b[k - j];
    b[k] = acc / Real(k);
  }
  return {a.anchor(), std::move(b)};
}

template <class Real>
BasicTaylorJet<Real> log(const BasicTaylorJet<Real>& a) {
  using std::log;
  if (!(a[0] > Real(0))) throw JetDomainError("log of a series with non-positive constant term");
  const int n = a.degree();
  auto b = detail::zeros<Real>(n);
  b[0] = log(a[0]);
  for (int k = 1; k <= n; ++k) {
    Real acc = a[k];
    for (int j = 1; j < k; ++j) acc -= Real(j) * b[j] * a[k - j] / Real(k);
    b[k] = acc / a[0];
  }
  return {a.anchor(), std::move(b)};
}

/// a^p for an integer exponent; valid for any constant term when p >= 0.
template <class Real>
BasicTaylorJet<Real> pow(const BasicTaylorJet<Real>& a, int p) {
  if (p < 0) return Real(1) / pow(a, -p);
  auto result = BasicTaylorJet<Real>::constant(a.anchor(), Real(1), a.degree());
  auto base = a;
  for (unsigned e = static_cast<unsigned>(p); e != 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

/// a^p for a real exponent; requires a positive constant term unless p is
/// integral.
template <class Real>
BasicTaylorJet<Real> pow(const BasicTaylorJet<Real>& a, const Real& p) {
  using std::floor;
  using std::pow;
  using std::abs;
  if (p == floor(p) && abs(p) <= Real(1 << 20)) {
    return pow(a, static_cast<int>(p));
  }
  if (!(a[0] > Real(0))) {
    throw JetDomainError("non-integer power of a series with non-positive constant term");
  }
  const int n = a.degree();
  auto b = detail::zeros<Real>(n);
  b[0] = pow(a[0], p);
  for (int k = 1; k <= n; ++k) {
    Real acc(0);
    for (int j = 1; j <= k; ++j) acc += (p * Real(j) - Real(k - j)) * a[j] * b[k - j];
    b[k] = acc / (Real(k) * a[0]);
  }
  return {a.anchor(), std::move(b)};
}

template <class Real>
BasicTaylorJet<Real> sqrt(const BasicTaylorJet<Real>& a) {
  using std::sqrt;
  // At 0 only the value exists; the derivative is infinite.
  if (!(a[0] > Real(0)) && !(a[0] == Real(0) && a.degree() == 0)) {
    throw JetDomainError("sqrt of a series with non-positive constant term");
  }
  const int n = a.degree();
  auto b = detail::zeros<Real>(n);
  b[0] = sqrt(a[0]);
  for (int k = 1; k <= n; ++k) {
    Real acc = a[k];
    for (int j = 1; j < k; ++j) acc -= b[j] * b[k - j];
    b[k] = acc / (Real(2) * b[0]);
  }
  return {a.anchor(), std::move(b)};
}

/// sin and cos share one recurrence; returns {sin(a), cos(a)}.
template <class Real>
std::pair<BasicTaylorJet<Real>, BasicTaylorJet<Real>> sincos(const BasicTaylorJet<Real>& a) {
  using std::cos;
  using std::sin;
  const int n = a.degree();
  auto s = detail::zeros<Real>(n);
  auto c = detail::zeros<Real>(n);
  s[0] = sin(a[0]);
  c[0] = cos(a[0]);
  for (int k = 1; k <= n; ++k) {
    Real ds(0), dc(0);
    for (int j = 1; j <= k; ++j) {
      ds += Real(j) * a[j] * c[k - j];
      dc -= Real(j) * a[j] * s[k - j];
    }
    s[k] = ds / Real(k);
    c[k] = dc / Real(k);
  }
  return {BasicTaylorJet<Real>(a.anchor(), std::move(s)), BasicTaylorJet<Real>(a.anchor(), std::move(c))};
}

template <class Real>
BasicTaylorJet<Real> sin(const BasicTaylorJet<Real>& a) {
  return sincos(a).first;
}

template <class Real>
BasicTaylorJet<Real> cos(const BasicTaylorJet<Real>& a) {
  return sincos(a).second;
}

template <class Real>
BasicTaylorJet<Real> tan(const BasicTaylorJet<Real>& a) {
  using std::tan;
  const int n = a.degree();
  auto t = detail::zeros<Real>(n);
  auto w = detail::zeros<Real>(n);  // 1 + t^2
  t[0] = tan(a[0]);
  w[0] = Real(1) + t[0] * t[0];
  for (int k = 1; k <= n; ++k) {
    Real acc(0);
    for (int j = 1; j <= k; ++j) acc += Real(j) * a[j] * w[k - j];
    t[k] = acc / Real(k);
    Real sq(0);
    for (int j = 0; j <= k; ++j) sq += t[j] * t[k - j];
    w[k] = sq;
  }
  if (!detail::is_finite(t[0])) throw JetDomainError("tan evaluated at a pole");
  return {a.anchor(), std::move(t)};
}

template <class Real>
BasicTaylorJet<Real> atan(const BasicTaylorJet<Real>& a) {
  using std::atan;
  // atan(a)' = a' / (1 + a^2)
  const auto slope = differentiate(a) / (Real(1) + a * a).truncated(std::max(a.degree() - 1, 0));
  return integrate(slope, atan(a[0]), a.degree());
}

/// |a| away from the kink: sign(a0) * a. Throws at a0 == 0 unless the jet
/// has degree 0, where only the value is requested.
template <class Real>
BasicTaylorJet<Real> abs(const BasicTaylorJet<Real>& a) {
  if (a[0] == Real(0)) {
    if (a.degree() == 0) return a;
    throw JetDomainError("abs is not differentiable at 0");
  }
  return a[0] < Real(0) ? -a : a;
}

}  // namespace revroot
