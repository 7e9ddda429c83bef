#ifndef EHMM_LOG_MATH_HPP
#define EHMM_LOG_MATH_HPP

#include <cmath>
#include <limits>
#include <span>

#include "ehmm/errors.hpp"

namespace ehmm {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without leaving the log domain. exp(-60) is below
// 1e-26 relative, so the fast path loses nothing at double precision.
inline double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == kNegInf) return a;
  const double d = a - b;
  if (d > 60.0) return a;
  return a + std::log1p(std::exp(-d));
}

// Two-pass log of the sum of exponentials, accumulated in index order.
inline double log_sum(std::span<const double> xs) {
  double m = kNegInf;
  for (double x : xs)
    if (x > m) m = x;
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

// -ln(density). Zero density costs infinity; negative densities are rejected.
inline double log_loss(double density) {
  if (std::isnan(density) || density < 0.0)
    throw InvalidInput("log_loss: density must be >= 0");
  if (density == 0.0) return kPosInf;
  return -std::log(density);
}

// A nonnegative weight carried as its natural logarithm. Negative infinity
// encodes weight zero; products and sums never leave the representable range.
class LogWeight {
 public:
  LogWeight() : value_(kNegInf) {}
  static LogWeight from_log(double log_value) { return LogWeight(log_value); }
  static LogWeight from_linear(double w) {
    if (std::isnan(w) || w < 0.0)
      throw InvalidInput("LogWeight: weight must be >= 0");
    return LogWeight(w == 0.0 ? kNegInf : std::log(w));
  }
  static LogWeight zero() { return LogWeight(kNegInf); }
  static LogWeight one() { return LogWeight(0.0); }

  double log() const { return value_; }
  double linear() const { return std::exp(value_); }
  bool is_zero() const { return value_ == kNegInf; }

  friend LogWeight operator*(LogWeight a, LogWeight b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return LogWeight(a.value_ + b.value_);
  }
  friend LogWeight operator+(LogWeight a, LogWeight b) {
    return LogWeight(log_add(a.value_, b.value_));
  }
  friend bool operator==(LogWeight a, LogWeight b) {
    return a.value_ == b.value_;
  }
  friend auto operator<=>(LogWeight a, LogWeight b) {
    return a.value_ <=> b.value_;
  }

 private:
  explicit LogWeight(double v) : value_(v) {}
  double value_;
};

}  // namespace ehmm

#endif  // EHMM_LOG_MATH_HPP
