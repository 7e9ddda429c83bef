#ifndef EHMM_DATAGEN_HPP
#define EHMM_DATAGEN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ehmm/constructions.hpp"
#include "ehmm/model.hpp"

namespace ehmm {

inline constexpr double kLog2Pi = 1.8378770664093453;

/// Gaussian base experts indexed by integer mean: unit-variance normal
/// densities, independent of the round.
class GaussianAdvice final : public ExpertAdvice {
 public:
  double log_density(std::int64_t, ExpertId expert, double x) const override {
    const double d = x - double(expert.value);
    return -0.5 * kLog2Pi - 0.5 * d * d;
  }
};

/// One generated segment: `length` rounds climbing at `rate` per outcome.
struct SegmentSpec {
  std::int64_t length = 1;
  double rate = 0.0;
};

/// Deterministic drifting-mean dataset. Freezing segments restart from 0 at
/// the segment boundary; sleeping segments continue the line through the
/// origin with their own rate, as if generated from time 1 but unobserved
/// until the segment starts. Optional Gaussian noise for robustness tests.
struct DriftDatasetSpec {
  std::vector<SegmentSpec> segments;
  SegmentMode mode = SegmentMode::kFreezing;
  double noise_amplitude = 0.0;
  std::uint64_t seed = 0;

  std::int64_t horizon() const {
    std::int64_t total = 0;
    for (const auto& s : segments) total += s.length;
    return total;
  }
};

std::vector<double> gen_drift_data(const DriftDatasetSpec& spec);

/// The drifting-mean experiment geometry: 10 segments of 100 outcomes with
/// rates alternating 0.1, 0.3, 0.1, ... Returns (sleeping, freezing).
std::pair<DriftDatasetSpec, DriftDatasetSpec> fig2_specs();

/// The matched reference: one cell per generated segment, labelled with the
/// index of the member whose drift rate generated it.
Segmentation spec_segmentation(const DriftDatasetSpec& spec);

}  // namespace ehmm

#endif  // EHMM_DATAGEN_HPP
