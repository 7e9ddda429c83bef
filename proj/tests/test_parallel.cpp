#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ehmm/datagen.hpp"
#include "ehmm/forward.hpp"
#include "ehmm/oracles.hpp"
#include "ehmm/reference.hpp"

using namespace ehmm;

namespace {

FiniteDist<int> uniform_members(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return FiniteDist<int>::uniform(ids);
}

// Transition targets jump around the ring, so the contribution stream of the
// evolution step is not sorted and the generic sort path gets exercised.
Ehmm build_ring_shuffle(int states) {
  auto transition = [states](StateId q, StateRow& out) {
    const std::int64_t a = (q.index + 2) % states;
    const std::int64_t b = (q.index * 2 + 1) % states;
    if (a == b) {
      out.emplace_back(StateId{0, a}, 1.0);
      return;
    }
    out.emplace_back(StateId{0, std::min(a, b)}, 0.6);
    out.emplace_back(StateId{0, std::max(a, b)}, 0.4);
  };
  auto production = [](StateId q, ExpertRow& out) {
    out.emplace_back(ExpertId{q.index}, 1.0);
  };
  std::vector<StateDist::Entry> initial;
  for (int s = 0; s < states; ++s)
    initial.emplace_back(StateId{0, s}, 1.0 / states);
  return Ehmm(StateDist::from_entries(std::move(initial)), transition,
              production);
}

}  // namespace

TEST_CASE("serial and OpenMP segment tables are bit-identical") {
  const GaussianAdvice advice;
  DriftDatasetSpec spec{{{20, 0.1}, {20, 0.3}}, SegmentMode::kSleeping};
  const auto data = gen_drift_data(spec);
  const auto union_model = build_bayes_union(
      uniform_members(2), {build_dm({0.1}), build_dm({0.3})});

  for (SegmentMode mode : {SegmentMode::kFreezing, SegmentMode::kSleeping}) {
    const auto serial =
        build_segment_loss_table_serial(mode, union_model, advice, data);
    const auto parallel =
        build_segment_loss_table(mode, union_model, advice, data);
    REQUIRE(serial.raw().size() == parallel.raw().size());
    for (std::size_t i = 0; i < serial.raw().size(); ++i)
      CHECK(serial.raw()[i] == parallel.raw()[i]);
  }
}

TEST_CASE("table rows equal one-off segment losses") {
  const GaussianAdvice advice;
  DriftDatasetSpec spec{{{6, 0.2}, {6, 0.4}}, SegmentMode::kFreezing};
  const auto data = gen_drift_data(spec);
  const auto model = build_dm({0.2});
  for (SegmentMode mode : {SegmentMode::kFreezing, SegmentMode::kSleeping}) {
    const auto table = build_segment_loss_table(mode, model, advice, data);
    for (const Segment seg :
         {Segment(1, 12), Segment(1, 1), Segment(5, 9), Segment(12, 12),
          Segment(3, 3)}) {
      CHECK(table.at(seg) == segment_loss(mode, model, seg, advice, data));
    }
  }
}

TEST_CASE("unsorted transition streams still match the path oracle") {
  const GaussianAdvice advice;
  const auto model = build_ring_shuffle(5);
  const std::vector<double> data{0.3, 2.1, 4.4, 1.2};
  const double fwd =
      run_forward(model, TransitionOp::sparse(), advice, data).total_log_loss;
  const double oracle = oracle::path_sum(model, advice, data);
  CHECK(fwd == doctest::Approx(oracle).epsilon(1e-9));

  // and under the share operator against the mixture oracle
  auto [share_model, op] = build_fs_learning(SegmentMode::kFreezing, 0.4,
                                             model);
  const double share_fwd =
      run_forward(share_model, op, advice, data).total_log_loss;
  const double mixture = oracle::segmentation_mixture(
      SegmentMode::kFreezing, 0.4, model, advice, data);
  CHECK(share_fwd == doctest::Approx(mixture).epsilon(1e-9));
}
