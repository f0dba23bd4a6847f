#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mb/precision.hpp"

namespace mb {

/// A real number stored as sign and natural log of its absolute value.
///
/// This is the carrier for every gamma-ratio product in the library:
/// normalisation constants and moment determinants routinely span
/// hundreds of orders of magnitude, so they never exist in linear
/// double representation.  When sign() == 0 the value is exactly zero
/// and logmag() is meaningless.
class SignedLogReal {
 public:
  SignedLogReal() : sign_(0), logmag_(-std::numeric_limits<double>::infinity()) {}

  static SignedLogReal zero() { return SignedLogReal(); }
  static SignedLogReal one() { return from_log(+1, 0.0); }

  static SignedLogReal from_log(int sign, double logmag) {
    SignedLogReal r;
    if (sign == 0) return r;
    if (sign != 1 && sign != -1) throw std::invalid_argument("SignedLogReal: sign must be -1, 0 or +1");
    if (std::isnan(logmag)) throw std::invalid_argument("SignedLogReal: NaN log-magnitude");
    r.sign_ = sign;
    r.logmag_ = logmag;
    return r;
  }

  static SignedLogReal from_real(double v) {
    if (std::isnan(v)) throw std::invalid_argument("SignedLogReal: NaN value");
    if (v == 0.0) return zero();
    return from_log(v > 0 ? +1 : -1, std::log(std::fabs(v)));
  }

  int sign() const { return sign_; }
  double logmag() const { return logmag_; }
  bool is_zero() const { return sign_ == 0; }

  /// Linear-domain value; overflows to +-inf, underflows to (signed) 0.
  double to_real() const {
    if (sign_ == 0) return 0.0;
    return static_cast<double>(sign_) * std::exp(logmag_);
  }

  SignedLogReal operator-() const {
    SignedLogReal r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  SignedLogReal& operator*=(const SignedLogReal& o) {
    if (sign_ == 0 || o.sign_ == 0) { *this = zero(); return *this; }
    sign_ *= o.sign_;
    logmag_ += o.logmag_;
    return *this;
  }
  SignedLogReal operator*(const SignedLogReal& o) const {
    SignedLogReal r = *this;
    r *= o;
    return r;
  }

  SignedLogReal& operator/=(const SignedLogReal& o) {
    if (o.sign_ == 0) throw std::domain_error("SignedLogReal: division by exact zero");
    if (sign_ == 0) return *this;
    sign_ *= o.sign_;
    logmag_ -= o.logmag_;
    return *this;
  }
  SignedLogReal operator/(const SignedLogReal& o) const {
    SignedLogReal r = *this;
    r /= o;
    return r;
  }

  /// Log-domain addition via log1p; exact cancellation yields zero().
  SignedLogReal operator+(const SignedLogReal& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    const SignedLogReal& big = (logmag_ >= o.logmag_) ? *this : o;
    const SignedLogReal& small = (logmag_ >= o.logmag_) ? o : *this;
    double t = static_cast<double>(big.sign_ * small.sign_) * std::exp(small.logmag_ - big.logmag_);
    double u = std::log1p(t);
    if (t <= -1.0) return zero();
    return from_log(big.sign_, big.logmag_ + u);
  }
  SignedLogReal operator-(const SignedLogReal& o) const { return *this + (-o); }

  /// this^e for real e; requires a non-negative base unless e is integral.
  SignedLogReal pow(double e) const {
    if (sign_ == 0) {
      if (e <= 0) throw std::domain_error("SignedLogReal: 0 raised to non-positive power");
      return zero();
    }
    if (sign_ < 0) {
      double ip;
      if (std::modf(e, &ip) != 0.0)
        throw std::domain_error("SignedLogReal: negative base with non-integer exponent");
      int s = (static_cast<long long>(ip) % 2 == 0) ? +1 : -1;
      return from_log(s, logmag_ * e);
    }
    return from_log(+1, logmag_ * e);
  }

 private:
  int sign_;
  double logmag_;
};

/// Compensated accumulator for sums of SignedLogReal terms.
///
/// Terms are collected, rescaled against the max log-magnitude and summed
/// with Kahan compensation in extended precision.  Used everywhere the
/// closed forms alternate in sign (polynomial coefficient assembly,
/// subset-determinant sums).
class LogSum {
 public:
  void add(const SignedLogReal& t) {
    if (!t.is_zero()) terms_.push_back(t);
  }

  bool empty() const { return terms_.empty(); }

  SignedLogReal total() const {
    if (terms_.empty()) return SignedLogReal::zero();
    double m = terms_.front().logmag();
    for (const auto& t : terms_) m = std::max(m, t.logmag());
    double s = compensated_sum(terms_.size(), [&](std::size_t i) {
      return static_cast<double>(terms_[i].sign()) * std::exp(terms_[i].logmag() - m);
    });
    if (s == 0.0) return SignedLogReal::zero();
    int sign = (s > 0) ? +1 : -1;
    return SignedLogReal::from_log(sign, m + std::log(std::fabs(s)));
  }

 private:
  std::vector<SignedLogReal> terms_;
};

/// |x - y| / max(|x|, |y|) in log domain; 0 if both are exact zeros.
inline double rel_diff(const SignedLogReal& x, const SignedLogReal& y) {
  if (x.is_zero() && y.is_zero()) return 0.0;
  SignedLogReal d = x - y;
  if (d.is_zero()) return 0.0;
  double m = std::max(x.is_zero() ? -std::numeric_limits<double>::infinity() : x.logmag(),
                      y.is_zero() ? -std::numeric_limits<double>::infinity() : y.logmag());
  return std::exp(d.logmag() - m);
}

}  // namespace mb
