#ifndef EHMM_FORWARD_HPP
#define EHMM_FORWARD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ehmm/model.hpp"

namespace ehmm {

/// Rolling state of the forward algorithm. `weights` is the posterior over
/// hidden states given all outcomes before round t, kept in the log domain;
/// its support is exactly the set of states with positive forward
/// probability (no epsilon pruning). `forwarded_prior` tracks P^(t-1) pi and
/// exists only under the sleeping share operator.
struct ForwardState {
  std::int64_t t = 1;
  LogDist<StateId> weights;
  double cum_log_loss = 0.0;
  std::optional<LogDist<StateId>> forwarded_prior;
};

ForwardState forward_init(const Ehmm& model, const TransitionOp& op);

/// Marginal distribution over expert identities at the current round:
/// m(e) = sum_q lambda(q) Gamma_q(e). The round's predictive density at an
/// outcome x is sum_e m(e) xi^e_t(x).
ExpertDist predict(const ForwardState& state, const Ehmm& model);

/// One round of the forward algorithm: score the outcome, pay its log loss,
/// condition the posterior, and push it through the transition operator.
/// Throws ZeroDensity if the whole mixture assigns the outcome density zero.
std::pair<ForwardState, double> observe(ForwardState state, const Ehmm& model,
                                        const TransitionOp& op,
                                        const ExpertAdvice& advice, double x);

struct RunResult {
  std::vector<double> per_round_losses;
  double total_log_loss = 0.0;
  std::vector<std::int64_t> active_counts;  // support size entering each round
};

RunResult run_forward(const Ehmm& model, const TransitionOp& op,
                      const ExpertAdvice& advice, std::span<const double> data);

/// Forward run over rounds first_round .. first_round + data.size() - 1.
/// Advice is queried at the true round indices. When `initial_override` is
/// given it replaces the model's initial distribution (used by slept segment
/// models, whose starting point is the prior forwarded without observations).
RunResult run_forward_from(const Ehmm& model, const TransitionOp& op,
                           const ExpertAdvice& advice,
                           std::span<const double> data,
                           std::int64_t first_round,
                           const LogDist<StateId>* initial_override = nullptr);

/// One application of the model's transition to a log-domain distribution.
LogDist<StateId> advance_prior(const Ehmm& model, const LogDist<StateId>& dist);

/// Drops states whose normalized posterior log-weight is below `threshold`
/// and renormalizes the rest. Off by default everywhere: pruning trades the
/// exact-support guarantee for speed, so only the CLI flag enables it.
void prune_weights_below(ForwardState& state, double threshold);

}  // namespace ehmm

#endif  // EHMM_FORWARD_HPP
