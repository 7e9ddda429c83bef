#ifndef EHMM_REFERENCE_HPP
#define EHMM_REFERENCE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ehmm/segment_table.hpp"

namespace ehmm {

/// Reported slacks below this are bound violations.
inline constexpr double kBoundTolerance = 1e-9;

/// How a reference scheme charges a cell to its selected expert:
/// kStandard sums the per-round losses of the expert's single full-data run;
/// the local-learner kinds reset the expert per cell, freezing or sleeping.
enum class SchemeKind { kStandard, kLLFreezing, kLLSleeping };

/// Cross entropy H(a, b) = -a ln b - (1-a) ln(1-b), with 0 ln 0 = 0.
/// The per-transition switching cost of the regret bound.
double entropy_cross(double a, double b);

/// One additive piece of the regret-bound right-hand side next to the
/// algorithm's actual loss.
struct BoundReport {
  double reference_loss = 0.0;
  double switching_term = 0.0;
  double selection_term = 0.0;
  double rhs = 0.0;
  double algorithm_loss = 0.0;
  double slack = 0.0;
  double alpha_star = 0.0;
};

/// -ln of the frozen/slept model's probability of the segment's outcomes.
/// Advice is queried at the original round indices.
double segment_loss(const SegmentModel& segment_model,
                    const ExpertAdvice& advice, std::span<const double> data);
double segment_loss(SegmentMode mode, const Ehmm& model, Segment seg,
                    const ExpertAdvice& advice, std::span<const double> data);

/// Per-round losses of each member's full-data forward run.
std::vector<std::vector<double>> member_round_losses(
    std::span<const Ehmm> members, const ExpertAdvice& advice,
    std::span<const double> data);

/// Advice source backed by precomputed per-round losses; expert i's
/// prediction at round t has log density -losses[i][t-1]. This is how whole
/// models are treated as black-box experts.
class PrecomputedAdvice final : public ExpertAdvice {
 public:
  explicit PrecomputedAdvice(std::vector<std::vector<double>> round_losses)
      : losses_(std::move(round_losses)) {}
  double log_density(std::int64_t t, ExpertId e, double) const override {
    return -losses_.at(std::size_t(e.value)).at(std::size_t(t - 1));
  }

 private:
  std::vector<std::vector<double>> losses_;
};

/// Precomputed cell losses for one scheme kind, so sweeps over many
/// segmentations and labellings cost O(cells) per query.
class ReferenceTables {
 public:
  static ReferenceTables build(SchemeKind kind,
                               std::span<const Ehmm> members,
                               const ExpertAdvice& advice,
                               std::span<const double> data);

  double cell_loss(int member, Segment cell) const;
  double loss(const Segmentation& seg, const Labelling<int>& labels) const;
  SchemeKind kind() const { return kind_; }
  std::int64_t horizon() const { return horizon_; }
  int member_count() const { return member_count_; }

 private:
  SchemeKind kind_ = SchemeKind::kStandard;
  std::int64_t horizon_ = 0;
  int member_count_ = 0;
  std::vector<std::vector<double>> prefix_;   // standard: per-member prefix sums
  std::vector<SegmentLossTable> tables_;      // local learners: per-member
};

/// Total loss the reference scheme assigns to a segmentation + labelling.
double reference_loss(SchemeKind kind, const Segmentation& seg,
                      const Labelling<int>& labels,
                      std::span<const Ehmm> members,
                      const ExpertAdvice& advice, std::span<const double> data);

/// The bound's right-hand side for a given reference configuration.
/// algorithm_loss and slack are left NaN; alpha_star is (|P|-1)/(T-1),
/// taken as 0 when T = 1.
BoundReport bound_rhs(std::int64_t horizon, const Segmentation& seg,
                      const Labelling<int>& labels,
                      const FiniteDist<int>& prior, double alpha,
                      double reference);

/// Completes a report with the algorithm's loss and the slack.
/// Throws BoundViolation when slack < -kBoundTolerance.
BoundReport check_bound(double algorithm_loss, std::int64_t horizon,
                        const Segmentation& seg, const Labelling<int>& labels,
                        const FiniteDist<int>& prior, double alpha,
                        double reference);
BoundReport check_bound(double algorithm_loss, SchemeKind kind,
                        const Segmentation& seg, const Labelling<int>& labels,
                        const FiniteDist<int>& prior, double alpha,
                        std::span<const Ehmm> members,
                        const ExpertAdvice& advice,
                        std::span<const double> data);

/// Per-round losses of all three reference schemes for one fixed
/// segmentation + labelling. Cell boundaries reset the local learners; the
/// standard columns come from the members' full-data runs.
struct SchemeRoundLosses {
  std::vector<double> standard;
  std::vector<double> ll_freezing;
  std::vector<double> ll_sleeping;
};

SchemeRoundLosses scheme_round_losses(const Segmentation& seg,
                                      const Labelling<int>& labels,
                                      std::span<const Ehmm> members,
                                      const ExpertAdvice& advice,
                                      std::span<const double> data);

struct BestSegmentation {
  Segmentation seg;
  Labelling<int> labels;
  double loss = 0.0;
};

/// Dynamic program over cut points minimizing the reference loss, with ties
/// broken toward the earlier cut point and the lower-indexed member.
BestSegmentation best_segmentation(SchemeKind kind,
                                   std::span<const Ehmm> members,
                                   const ExpertAdvice& advice,
                                   std::span<const double> data,
                                   std::optional<int> max_cells = std::nullopt);
BestSegmentation best_segmentation(const ReferenceTables& tables,
                                   std::optional<int> max_cells = std::nullopt);

}  // namespace ehmm

#endif  // EHMM_REFERENCE_HPP
