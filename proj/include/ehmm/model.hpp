#ifndef EHMM_MODEL_HPP
#define EHMM_MODEL_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ehmm/distribution.hpp"

namespace ehmm {

/// Hidden-state identifier: a component tag (used to keep unioned models'
/// state spaces disjoint) plus a local index. Totally ordered so iteration
/// is deterministic.
struct StateId {
  std::uint32_t component = 0;
  std::int64_t index = 0;
  friend auto operator<=>(const StateId&, const StateId&) = default;
};

inline std::string to_string(const StateId& q) {
  return std::to_string(q.component) + "/" + std::to_string(q.index);
}

/// Base-expert identifier. Experts are shared between models (a union of
/// models keeps each state's original expert interpretation), so there is
/// no component tag.
struct ExpertId {
  std::int64_t value = 0;
  friend auto operator<=>(const ExpertId&, const ExpertId&) = default;
};

using StateDist = FiniteDist<StateId>;
using ExpertDist = FiniteDist<ExpertId>;
using StateRow = std::vector<std::pair<StateId, double>>;
using ExpertRow = std::vector<std::pair<ExpertId, double>>;

/// A hidden Markov model over base experts: an initial distribution pi, a
/// transition function P and a production function Gamma mapping each state
/// to a distribution over expert identities. Transition and production rows
/// are computed on demand, so unbounded state spaces are fine; rows are
/// written into a caller-provided buffer sorted by key with strictly
/// positive probabilities summing to 1.
class Ehmm {
 public:
  using TransitionFn = std::function<void(StateId, StateRow&)>;
  using ProductionFn = std::function<void(StateId, ExpertRow&)>;

  Ehmm() = default;
  Ehmm(StateDist initial, TransitionFn transition, ProductionFn production,
       std::uint32_t component_count = 1)
      : initial_(std::move(initial)),
        transition_(std::move(transition)),
        production_(std::move(production)),
        component_count_(component_count) {
    if (initial_.empty()) throw InvalidInput("Ehmm: empty initial distribution");
    if (component_count_ == 0)
      throw InvalidInput("Ehmm: component count must be >= 1");
  }

  const StateDist& initial() const { return initial_; }
  std::uint32_t component_count() const { return component_count_; }

  void transition(StateId q, StateRow& out) const {
    out.clear();
    transition_(q, out);
  }
  void production(StateId q, ExpertRow& out) const {
    out.clear();
    production_(q, out);
  }

  // Validating conveniences; not for hot paths.
  StateDist transition_dist(StateId q) const {
    StateRow row;
    transition(q, row);
    return StateDist::from_entries(std::move(row));
  }
  ExpertDist production_dist(StateId q) const {
    ExpertRow row;
    production(q, row);
    return ExpertDist::from_entries(std::move(row));
  }

 private:
  StateDist initial_;
  TransitionFn transition_;
  ProductionFn production_;
  std::uint32_t component_count_ = 1;
};

/// Per-round predictive densities of the base experts. Implementations must
/// be pure in (t, expert, outcome). Densities are queried in the log domain
/// so that far-off-mean Gaussians keep exact support.
class ExpertAdvice {
 public:
  virtual ~ExpertAdvice() = default;
  virtual double log_density(std::int64_t t, ExpertId expert, double x) const = 0;
  double density(std::int64_t t, ExpertId expert, double x) const {
    return std::exp(log_density(t, expert, x));
  }
};

/// Adapts a callable returning a plain density.
class FunctionAdvice : public ExpertAdvice {
 public:
  using DensityFn = std::function<double(std::int64_t, ExpertId, double)>;
  explicit FunctionAdvice(DensityFn fn) : fn_(std::move(fn)) {}
  double log_density(std::int64_t t, ExpertId e, double x) const override {
    const double d = fn_(t, e, x);
    if (std::isnan(d) || d < 0.0)
      throw InvalidInput("FunctionAdvice: densities must be >= 0");
    return d == 0.0 ? kNegInf : std::log(d);
  }

 private:
  DensityFn fn_;
};

/// How the posterior is pushed from one round to the next.
///
/// Sparse applies the model's own transition rows. Share mixes the
/// transitioned posterior with a reset distribution at rate alpha:
///   (1-alpha) * P lambda + alpha * rho_t
/// where rho_t is the model's initial distribution (freezing; constant) or
/// the initial distribution forwarded through t transitions (sleeping;
/// maintained incrementally by the forward pass).
struct TransitionOp {
  enum class Kind { kSparse, kShare };
  enum class Reset { kInitial, kForwarded };

  Kind kind = Kind::kSparse;
  double alpha = 0.0;
  Reset reset = Reset::kInitial;

  static TransitionOp sparse() { return {}; }
  static TransitionOp share_freezing(double alpha) {
    check_rate(alpha);
    return {Kind::kShare, alpha, Reset::kInitial};
  }
  static TransitionOp share_sleeping(double alpha) {
    check_rate(alpha);
    return {Kind::kShare, alpha, Reset::kForwarded};
  }

 private:
  static void check_rate(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw InvalidInput("TransitionOp: switching rate must be in [0,1]");
  }
};

/// Sizes of the sets reachable in exactly t steps from the initial support,
/// for t = 1..horizon. Purely structural; independent of data.
std::vector<std::int64_t> reachable_counts(const Ehmm& model,
                                           std::int64_t horizon);

/// Sizes of the running unions of the exactly-t reachable sets.
std::vector<std::int64_t> reachable_prefix_union_counts(const Ehmm& model,
                                                        std::int64_t horizon);

}  // namespace ehmm

#endif  // EHMM_MODEL_HPP
