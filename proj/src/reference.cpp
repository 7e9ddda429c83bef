#include "ehmm/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ehmm/forward.hpp"

namespace ehmm {

double entropy_cross(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0))
    throw InvalidInput("entropy_cross: arguments must be in [0,1]");
  double out = 0.0;
  if (a > 0.0) out += a * -std::log(b);
  if (a < 1.0) out += (1.0 - a) * -std::log1p(-b);
  return out;
}

double segment_loss(const SegmentModel& segment_model,
                    const ExpertAdvice& advice, std::span<const double> data) {
  const Segment seg = segment_model.seg;
  if (seg.end > std::int64_t(data.size()))
    throw InvalidInput("segment_loss: segment beyond data horizon");
  const auto slice = data.subspan(std::size_t(seg.start - 1),
                                  std::size_t(seg.length()));
  const LogDist<StateId>* init = segment_model.initial_override
                                     ? &*segment_model.initial_override
                                     : nullptr;
  return run_forward_from(segment_model.model, TransitionOp::sparse(), advice,
                          slice, seg.start, init)
      .total_log_loss;
}

double segment_loss(SegmentMode mode, const Ehmm& model, Segment seg,
                    const ExpertAdvice& advice, std::span<const double> data) {
  const SegmentModel sm = mode == SegmentMode::kFreezing
                              ? freeze_segment(model, seg)
                              : sleep_segment(model, seg);
  return segment_loss(sm, advice, data);
}

std::vector<std::vector<double>> member_round_losses(
    std::span<const Ehmm> members, const ExpertAdvice& advice,
    std::span<const double> data) {
  std::vector<std::vector<double>> out;
  out.reserve(members.size());
  for (const Ehmm& m : members)
    out.push_back(
        run_forward(m, TransitionOp::sparse(), advice, data).per_round_losses);
  return out;
}

ReferenceTables ReferenceTables::build(SchemeKind kind,
                                       std::span<const Ehmm> members,
                                       const ExpertAdvice& advice,
                                       std::span<const double> data) {
  if (members.empty()) throw InvalidInput("ReferenceTables: no members");
  ReferenceTables tables;
  tables.kind_ = kind;
  tables.horizon_ = std::int64_t(data.size());
  tables.member_count_ = int(members.size());
  if (kind == SchemeKind::kStandard) {
    for (const auto& losses : member_round_losses(members, advice, data)) {
      std::vector<double> prefix(losses.size() + 1, 0.0);
      for (std::size_t i = 0; i < losses.size(); ++i)
        prefix[i + 1] = prefix[i] + losses[i];
      tables.prefix_.push_back(std::move(prefix));
    }
  } else {
    const SegmentMode mode = kind == SchemeKind::kLLFreezing
                                 ? SegmentMode::kFreezing
                                 : SegmentMode::kSleeping;
    for (const Ehmm& m : members)
      tables.tables_.push_back(build_segment_loss_table(mode, m, advice, data));
  }
  return tables;
}

double ReferenceTables::cell_loss(int member, Segment cell) const {
  if (member < 0 || member >= member_count_)
    throw InvalidInput("ReferenceTables: member index out of range");
  if (kind_ == SchemeKind::kStandard) {
    const auto& prefix = prefix_[std::size_t(member)];
    return prefix[std::size_t(cell.end)] - prefix[std::size_t(cell.start - 1)];
  }
  return tables_[std::size_t(member)].at(cell);
}

double ReferenceTables::loss(const Segmentation& seg,
                             const Labelling<int>& labels) const {
  if (seg.horizon() != horizon_)
    throw InvalidInput("ReferenceTables: segmentation horizon mismatch");
  if (labels.size() != seg.size())
    throw InvalidInput("ReferenceTables: one label per cell required");
  double total = 0.0;
  for (std::size_t i = 0; i < seg.size(); ++i)
    total += cell_loss(labels.label(i), seg.cells()[i]);
  return total;
}

double reference_loss(SchemeKind kind, const Segmentation& seg,
                      const Labelling<int>& labels,
                      std::span<const Ehmm> members,
                      const ExpertAdvice& advice,
                      std::span<const double> data) {
  if (kind == SchemeKind::kStandard)
    return ReferenceTables::build(kind, members, advice, data)
        .loss(seg, labels);
  // Local learners: run only the labelled cells, not the whole table.
  const SegmentMode mode = kind == SchemeKind::kLLFreezing
                               ? SegmentMode::kFreezing
                               : SegmentMode::kSleeping;
  if (labels.size() != seg.size())
    throw InvalidInput("reference_loss: one label per cell required");
  double total = 0.0;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    const int m = labels.label(i);
    if (m < 0 || m >= int(members.size()))
      throw InvalidInput("reference_loss: label out of range");
    total += segment_loss(mode, members[std::size_t(m)], seg.cells()[i],
                          advice, data);
  }
  return total;
}

BoundReport bound_rhs(std::int64_t horizon, const Segmentation& seg,
                      const Labelling<int>& labels,
                      const FiniteDist<int>& prior, double alpha,
                      double reference) {
  if (horizon < 1) throw InvalidInput("bound_rhs: horizon must be >= 1");
  if (seg.horizon() != horizon)
    throw InvalidInput("bound_rhs: segmentation does not cover the horizon");
  if (labels.size() != seg.size())
    throw InvalidInput("bound_rhs: one label per cell required");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidInput("bound_rhs: switching rate must be in [0,1]");

  BoundReport report;
  report.reference_loss = reference;
  report.alpha_star =
      horizon > 1 ? double(seg.size() - 1) / double(horizon - 1) : 0.0;
  report.switching_term =
      horizon > 1 ? double(horizon - 1) * entropy_cross(report.alpha_star, alpha)
                  : 0.0;
  report.selection_term = 0.0;
  for (int label : labels.labels())
    report.selection_term += log_loss(prior.prob(label));
  report.rhs =
      report.reference_loss + report.switching_term + report.selection_term;
  report.algorithm_loss = std::numeric_limits<double>::quiet_NaN();
  report.slack = std::numeric_limits<double>::quiet_NaN();
  return report;
}

BoundReport check_bound(double algorithm_loss, std::int64_t horizon,
                        const Segmentation& seg, const Labelling<int>& labels,
                        const FiniteDist<int>& prior, double alpha,
                        double reference) {
  BoundReport report = bound_rhs(horizon, seg, labels, prior, alpha, reference);
  report.algorithm_loss = algorithm_loss;
  report.slack = report.rhs - algorithm_loss;
  if (report.slack < -kBoundTolerance)
    throw BoundViolation(report.slack,
                         "regret bound violated: slack = " +
                             std::to_string(report.slack) + " on " +
                             seg.to_string());
  return report;
}

BoundReport check_bound(double algorithm_loss, SchemeKind kind,
                        const Segmentation& seg, const Labelling<int>& labels,
                        const FiniteDist<int>& prior, double alpha,
                        std::span<const Ehmm> members,
                        const ExpertAdvice& advice,
                        std::span<const double> data) {
  const double reference =
      reference_loss(kind, seg, labels, members, advice, data);
  return check_bound(algorithm_loss, std::int64_t(data.size()), seg, labels,
                     prior, alpha, reference);
}

SchemeRoundLosses scheme_round_losses(const Segmentation& seg,
                                      const Labelling<int>& labels,
                                      std::span<const Ehmm> members,
                                      const ExpertAdvice& advice,
                                      std::span<const double> data) {
  if (seg.horizon() != std::int64_t(data.size()))
    throw InvalidInput("scheme_round_losses: segmentation horizon mismatch");
  if (labels.size() != seg.size())
    throw InvalidInput("scheme_round_losses: one label per cell required");

  SchemeRoundLosses out;
  out.standard.resize(data.size());
  out.ll_freezing.resize(data.size());
  out.ll_sleeping.resize(data.size());
  const auto standard = member_round_losses(members, advice, data);

  for (std::size_t c = 0; c < seg.size(); ++c) {
    const Segment cell = seg.cells()[c];
    const int m = labels.label(c);
    if (m < 0 || m >= int(members.size()))
      throw InvalidInput("scheme_round_losses: label out of range");
    for (std::int64_t t = cell.start; t <= cell.end; ++t)
      out.standard[std::size_t(t - 1)] =
          standard[std::size_t(m)][std::size_t(t - 1)];
    const auto slice = data.subspan(std::size_t(cell.start - 1),
                                    std::size_t(cell.length()));
    for (SegmentMode mode : {SegmentMode::kFreezing, SegmentMode::kSleeping}) {
      const SegmentModel sm =
          mode == SegmentMode::kFreezing
              ? freeze_segment(members[std::size_t(m)], cell)
              : sleep_segment(members[std::size_t(m)], cell);
      const auto run = run_forward_from(
          sm.model, TransitionOp::sparse(), advice, slice, cell.start,
          sm.initial_override ? &*sm.initial_override : nullptr);
      auto& column = mode == SegmentMode::kFreezing ? out.ll_freezing
                                                    : out.ll_sleeping;
      for (std::int64_t t = cell.start; t <= cell.end; ++t)
        column[std::size_t(t - 1)] =
            run.per_round_losses[std::size_t(t - cell.start)];
    }
  }
  return out;
}

namespace {

BestSegmentation dp_unbounded(const ReferenceTables& tables) {
  const std::int64_t horizon = tables.horizon();
  const int members = tables.member_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(std::size_t(horizon) + 1, inf);
  std::vector<std::int64_t> cut(std::size_t(horizon) + 1, 0);
  std::vector<int> pick(std::size_t(horizon) + 1, 0);
  best[0] = 0.0;
  for (std::int64_t j = 1; j <= horizon; ++j) {
    for (std::int64_t i = 1; i <= j; ++i) {
      for (int m = 0; m < members; ++m) {
        const double value =
            best[std::size_t(i - 1)] + tables.cell_loss(m, Segment(i, j));
        if (value < best[std::size_t(j)]) {
          best[std::size_t(j)] = value;
          cut[std::size_t(j)] = i;
          pick[std::size_t(j)] = m;
        }
      }
    }
  }
  std::vector<Segment> cells;
  std::vector<int> labels;
  for (std::int64_t j = horizon; j > 0; j = cut[std::size_t(j)] - 1) {
    cells.emplace_back(cut[std::size_t(j)], j);
    labels.push_back(pick[std::size_t(j)]);
  }
  std::reverse(cells.begin(), cells.end());
  std::reverse(labels.begin(), labels.end());
  Segmentation seg(std::move(cells));
  Labelling<int> labelling(seg, std::move(labels));
  return {std::move(seg), std::move(labelling), best[std::size_t(horizon)]};
}

BestSegmentation dp_capped(const ReferenceTables& tables, int max_cells) {
  const std::int64_t horizon = tables.horizon();
  const int members = tables.member_count();
  const double inf = std::numeric_limits<double>::infinity();
  const auto idx = [horizon](int k, std::int64_t j) {
    return std::size_t(k) * std::size_t(horizon + 1) + std::size_t(j);
  };
  std::vector<double> best(std::size_t(max_cells + 1) * std::size_t(horizon + 1),
                           inf);
  std::vector<std::int64_t> cut(best.size(), 0);
  std::vector<int> pick(best.size(), 0);
  best[idx(0, 0)] = 0.0;
  for (int k = 1; k <= max_cells; ++k) {
    for (std::int64_t j = 1; j <= horizon; ++j) {
      for (std::int64_t i = 1; i <= j; ++i) {
        if (best[idx(k - 1, i - 1)] == inf) continue;
        for (int m = 0; m < members; ++m) {
          const double value =
              best[idx(k - 1, i - 1)] + tables.cell_loss(m, Segment(i, j));
          if (value < best[idx(k, j)]) {
            best[idx(k, j)] = value;
            cut[idx(k, j)] = i;
            pick[idx(k, j)] = m;
          }
        }
      }
    }
  }
  int best_k = 1;
  for (int k = 2; k <= max_cells; ++k)
    if (best[idx(k, horizon)] < best[idx(best_k, horizon)]) best_k = k;
  std::vector<Segment> cells;
  std::vector<int> labels;
  std::int64_t j = horizon;
  for (int k = best_k; k > 0; --k) {
    const std::int64_t i = cut[idx(k, j)];
    cells.emplace_back(i, j);
    labels.push_back(pick[idx(k, j)]);
    j = i - 1;
  }
  std::reverse(cells.begin(), cells.end());
  std::reverse(labels.begin(), labels.end());
  Segmentation seg(std::move(cells));
  Labelling<int> labelling(seg, std::move(labels));
  return {std::move(seg), std::move(labelling),
          best[idx(best_k, horizon)]};
}

}  // namespace

BestSegmentation best_segmentation(const ReferenceTables& tables,
                                   std::optional<int> max_cells) {
  if (max_cells) {
    if (*max_cells < 1)
      throw InvalidInput("best_segmentation: max_cells must be >= 1");
    return dp_capped(tables, int(std::min<std::int64_t>(*max_cells,
                                                        tables.horizon())));
  }
  return dp_unbounded(tables);
}

BestSegmentation best_segmentation(SchemeKind kind,
                                   std::span<const Ehmm> members,
                                   const ExpertAdvice& advice,
                                   std::span<const double> data,
                                   std::optional<int> max_cells) {
  return best_segmentation(ReferenceTables::build(kind, members, advice, data),
                           max_cells);
}

}  // namespace ehmm
