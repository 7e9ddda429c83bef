#include "ehmm/segment_table.hpp"

#include "ehmm/forward.hpp"

namespace ehmm {

namespace {

// Slept starting distributions for every start, computed once up front so
// that parallel workers share them instead of re-forwarding per start.
std::vector<LogDist<StateId>> slept_initials(const Ehmm& model,
                                             std::int64_t horizon) {
  std::vector<LogDist<StateId>> out;
  out.reserve(std::size_t(horizon));
  LogDist<StateId> cur = LogDist<StateId>::from_finite(model.initial());
  out.push_back(cur);
  for (std::int64_t start = 2; start <= horizon; ++start) {
    cur = advance_prior(model, cur);
    out.push_back(cur);
  }
  return out;
}

void fill_row(SegmentLossTable& table, const Ehmm& model,
              const ExpertAdvice& advice, std::span<const double> data,
              std::int64_t start, const LogDist<StateId>* initial_override) {
  const RunResult run =
      run_forward_from(model, TransitionOp::sparse(), advice,
                       data.subspan(std::size_t(start - 1)), start,
                       initial_override);
  double cum = 0.0;
  for (std::int64_t end = start; end <= table.horizon(); ++end) {
    cum += run.per_round_losses[std::size_t(end - start)];
    table.at(start, end) = cum;
  }
}

SegmentLossTable build_table(SegmentMode mode, const Ehmm& model,
                             const ExpertAdvice& advice,
                             std::span<const double> data, bool parallel) {
  if (data.empty()) throw InvalidInput("segment loss table: empty data");
  const std::int64_t horizon = std::int64_t(data.size());
  SegmentLossTable table(horizon);

  std::vector<LogDist<StateId>> slept;
  if (mode == SegmentMode::kSleeping) slept = slept_initials(model, horizon);
  auto initial_for = [&](std::int64_t start) -> const LogDist<StateId>* {
    if (mode != SegmentMode::kSleeping || start == 1) return nullptr;
    return &slept[std::size_t(start - 1)];
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t start = 1; start <= horizon; ++start)
      fill_row(table, model, advice, data, start, initial_for(start));
  } else {
    for (std::int64_t start = 1; start <= horizon; ++start)
      fill_row(table, model, advice, data, start, initial_for(start));
  }
  return table;
}

}  // namespace

SegmentLossTable build_segment_loss_table_serial(SegmentMode mode,
                                                 const Ehmm& model,
                                                 const ExpertAdvice& advice,
                                                 std::span<const double> data) {
  return build_table(mode, model, advice, data, false);
}

SegmentLossTable build_segment_loss_table(SegmentMode mode, const Ehmm& model,
                                          const ExpertAdvice& advice,
                                          std::span<const double> data) {
  return build_table(mode, model, advice, data, true);
}

}  // namespace ehmm
