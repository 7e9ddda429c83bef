#include "ehmm/datagen.hpp"

#include <cmath>
#include <random>

namespace ehmm {

std::vector<double> gen_drift_data(const DriftDatasetSpec& spec) {
  if (spec.segments.empty())
    throw InvalidInput("gen_drift_data: no segments");
  for (const auto& s : spec.segments) {
    if (s.length < 1) throw InvalidInput("gen_drift_data: segment length < 1");
    if (!std::isfinite(s.rate))
      throw InvalidInput("gen_drift_data: rate must be finite");
  }
  std::vector<double> data;
  data.reserve(std::size_t(spec.horizon()));
  std::int64_t start = 1;
  for (const auto& s : spec.segments) {
    for (std::int64_t t = start; t < start + s.length; ++t) {
      const double x = spec.mode == SegmentMode::kFreezing
                           ? s.rate * double(t - start)
                           : s.rate * double(t - 1);
      data.push_back(x);
    }
    start += s.length;
  }
  if (spec.noise_amplitude > 0.0) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    for (double& x : data) x += spec.noise_amplitude * noise(rng);
  }
  return data;
}

std::pair<DriftDatasetSpec, DriftDatasetSpec> fig2_specs() {
  DriftDatasetSpec sleeping;
  for (int i = 0; i < 10; ++i)
    sleeping.segments.push_back({100, i % 2 == 0 ? 0.1 : 0.3});
  sleeping.mode = SegmentMode::kSleeping;
  DriftDatasetSpec freezing = sleeping;
  freezing.mode = SegmentMode::kFreezing;
  return {sleeping, freezing};
}

Segmentation spec_segmentation(const DriftDatasetSpec& spec) {
  std::vector<Segment> cells;
  std::int64_t start = 1;
  for (const auto& s : spec.segments) {
    cells.emplace_back(start, start + s.length - 1);
    start += s.length;
  }
  return Segmentation(std::move(cells));
}

}  // namespace ehmm
