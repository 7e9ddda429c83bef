#ifndef EHMM_ERRORS_HPP
#define EHMM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ehmm {

// Bad arguments: malformed distributions, out-of-range parameters,
// mismatched labellings, unparseable specs.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard on an exponential or otherwise gated computation was hit
// (segmentation enumeration, path enumeration, exhaustive bound sweeps).
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The whole predictive mixture assigned density zero to an outcome; the
// posterior would be identically zero and the run cannot continue.
class ZeroDensity : public std::runtime_error {
 public:
  explicit ZeroDensity(std::int64_t round)
      : std::runtime_error("predictive density is zero at round " +
                           std::to_string(round)),
        round_(round) {}
  std::int64_t round() const { return round_; }

 private:
  std::int64_t round_;
};

// A regret bound slack fell below tolerance; primarily a test failure signal.
class BoundViolation : public std::runtime_error {
 public:
  BoundViolation(double slack, const std::string& what)
      : std::runtime_error(what), slack_(slack) {}
  double slack() const { return slack_; }

 private:
  double slack_;
};

}  // namespace ehmm

#endif  // EHMM_ERRORS_HPP
