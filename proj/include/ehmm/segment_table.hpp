#ifndef EHMM_SEGMENT_TABLE_HPP
#define EHMM_SEGMENT_TABLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ehmm/constructions.hpp"

namespace ehmm {

/// Losses of a model frozen or slept on every segment i:j of 1..T,
/// indexed 1-based inclusive.
class SegmentLossTable {
 public:
  explicit SegmentLossTable(std::int64_t horizon)
      : horizon_(horizon),
        loss_(std::size_t(horizon) * std::size_t(horizon), 0.0) {
    if (horizon < 1) throw InvalidInput("SegmentLossTable: horizon must be >= 1");
  }

  double at(std::int64_t start, std::int64_t end) const {
    return loss_[index(start, end)];
  }
  double& at(std::int64_t start, std::int64_t end) {
    return loss_[index(start, end)];
  }
  double at(const Segment& seg) const { return at(seg.start, seg.end); }
  std::int64_t horizon() const { return horizon_; }
  const std::vector<double>& raw() const { return loss_; }

 private:
  std::size_t index(std::int64_t start, std::int64_t end) const {
    if (start < 1 || end < start || end > horizon_)
      throw InvalidInput("SegmentLossTable: segment out of range");
    return std::size_t(start - 1) * std::size_t(horizon_) +
           std::size_t(end - 1);
  }
  std::int64_t horizon_;
  std::vector<double> loss_;
};

/// Fills the whole table with one forward run per segment start: the
/// cumulative loss at round j of the run started at i is exactly the loss
/// of the model on segment i:j. Runs for different starts are independent,
/// which is what the OpenMP variant exploits; both variants produce
/// bit-identical tables.
SegmentLossTable build_segment_loss_table_serial(SegmentMode mode,
                                                 const Ehmm& model,
                                                 const ExpertAdvice& advice,
                                                 std::span<const double> data);

SegmentLossTable build_segment_loss_table(SegmentMode mode, const Ehmm& model,
                                          const ExpertAdvice& advice,
                                          std::span<const double> data);

}  // namespace ehmm

#endif  // EHMM_SEGMENT_TABLE_HPP
