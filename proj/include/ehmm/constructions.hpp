#ifndef EHMM_CONSTRUCTIONS_HPP
#define EHMM_CONSTRUCTIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ehmm/forward.hpp"
#include "ehmm/model.hpp"
#include "ehmm/segments.hpp"

namespace ehmm {

/// Parameters of the drifting-mean learning expert: at each round the mean
/// index advances by one with probability theta, else stays.
struct DriftParams {
  double theta = 0.0;
};

/// Switching rate plus prior for fixed share.
struct SwitchParams {
  double alpha = 0.0;
  ExpertDist prior;
};

/// Whether a reset expert restarts its state chain from scratch (freezing)
/// or picks it up at the segment's true time (sleeping).
enum class SegmentMode { kFreezing, kSleeping };

/// Infinite chain over integer mean states; the state is the expert.
/// States are generated on demand, so nothing unbounded is materialized.
Ehmm build_dm(const DriftParams& params);

/// Bayesian mixture of base experts: states are the experts, identity
/// transitions, prior as the initial distribution.
Ehmm build_bayes(const ExpertDist& prior);

/// Bayesian mixture of whole models as a single model: the tagged disjoint
/// union of the member state spaces with a block-diagonal transition. States
/// keep their members' expert interpretations. The prior must be supported
/// on exactly 0..members-1.
Ehmm build_bayes_union(const FiniteDist<int>& prior, std::vector<Ehmm> members);

/// Classic fixed share over base experts: Bayes model plus a share operator
/// whose reset is the prior itself.
std::pair<Ehmm, TransitionOp> build_fixed_share(const SwitchParams& params);

/// Fixed share over learning experts: tracks the given union model, with a
/// switch resetting the entire union state. Freezing resets to the union's
/// initial distribution; sleeping resets to that distribution forwarded to
/// the current round (maintained incrementally by the forward pass).
std::pair<Ehmm, TransitionOp> build_fs_learning(SegmentMode mode, double alpha,
                                                Ehmm union_model);

/// A model restricted to a segment of rounds. The forward pass is reused
/// unchanged: the runner starts at seg.start (advice sees true round
/// indices) and, for slept models, from the overridden initial distribution.
struct SegmentModel {
  Ehmm model;
  Segment seg;
  std::optional<LogDist<StateId>> initial_override;
};

/// The model behaves as if the segment were the only data: its chain starts
/// from the initial distribution at seg.start.
SegmentModel freeze_segment(Ehmm model, Segment seg);

/// The model keeps the segment's timing: its chain starts from the initial
/// distribution pushed through seg.start - 1 transitions, unobserved.
SegmentModel sleep_segment(Ehmm model, Segment seg);

/// P^steps applied to the initial distribution, in the log domain.
LogDist<StateId> forwarded_initial(const Ehmm& model, std::int64_t steps);

/// The constant-reset share operator written out as explicit transition
/// rows: q -> (1-alpha) P_q + alpha pi. Used by path-enumeration checks;
/// the time-dependent sleeping operator has no such stationary form.
Ehmm materialize_share(Ehmm base, double alpha);

}  // namespace ehmm

#endif  // EHMM_CONSTRUCTIONS_HPP
