#include "ehmm/constructions.hpp"

#include <algorithm>
#include <memory>

namespace ehmm {

Ehmm build_dm(const DriftParams& params) {
  const double theta = params.theta;
  if (!(theta >= 0.0 && theta <= 1.0))
    throw InvalidInput("build_dm: theta must be in [0,1]");
  auto transition = [theta](StateId q, StateRow& out) {
    if (theta < 1.0) out.emplace_back(q, 1.0 - theta);
    if (theta > 0.0) out.emplace_back(StateId{q.component, q.index + 1}, theta);
  };
  auto production = [](StateId q, ExpertRow& out) {
    out.emplace_back(ExpertId{q.index}, 1.0);
  };
  return Ehmm(StateDist::point_mass(StateId{0, 0}), transition, production);
}

Ehmm build_bayes(const ExpertDist& prior) {
  std::vector<StateDist::Entry> initial;
  initial.reserve(prior.size());
  for (const auto& [e, w] : prior) initial.emplace_back(StateId{0, e.value}, w);
  auto transition = [](StateId q, StateRow& out) { out.emplace_back(q, 1.0); };
  auto production = [](StateId q, ExpertRow& out) {
    out.emplace_back(ExpertId{q.index}, 1.0);
  };
  return Ehmm(StateDist::from_entries(std::move(initial)), transition,
              production);
}

namespace {

std::size_t member_of(const std::vector<std::uint32_t>& offsets,
                      std::uint32_t component) {
  auto it = std::upper_bound(offsets.begin(), offsets.end(), component);
  return std::size_t(it - offsets.begin()) - 1;
}

}  // namespace

Ehmm build_bayes_union(const FiniteDist<int>& prior,
                       std::vector<Ehmm> members) {
  if (members.empty()) throw InvalidInput("build_bayes_union: no members");
  if (prior.size() != members.size())
    throw InvalidInput("build_bayes_union: prior must cover every member");
  for (int i = 0; i < int(members.size()); ++i)
    if (!prior.contains(i))
      throw InvalidInput("build_bayes_union: prior missing member " +
                         std::to_string(i));

  auto shared = std::make_shared<const std::vector<Ehmm>>(std::move(members));
  std::vector<std::uint32_t> offsets;
  offsets.reserve(shared->size());
  std::uint32_t total = 0;
  for (const Ehmm& m : *shared) {
    offsets.push_back(total);
    total += m.component_count();
  }

  std::vector<StateDist::Entry> initial;
  for (const auto& [i, w] : prior)
    for (const auto& [q, p] : (*shared)[std::size_t(i)].initial())
      initial.emplace_back(StateId{offsets[std::size_t(i)] + q.component, q.index},
                           w * p);

  auto transition = [shared, offsets](StateId q, StateRow& out) {
    const std::size_t i = member_of(offsets, q.component);
    (*shared)[i].transition(StateId{q.component - offsets[i], q.index}, out);
    for (auto& [r, p] : out) r.component += offsets[i];
  };
  auto production = [shared, offsets](StateId q, ExpertRow& out) {
    const std::size_t i = member_of(offsets, q.component);
    (*shared)[i].production(StateId{q.component - offsets[i], q.index}, out);
  };
  return Ehmm(StateDist::from_entries(std::move(initial)), transition,
              production, total);
}

std::pair<Ehmm, TransitionOp> build_fixed_share(const SwitchParams& params) {
  return {build_bayes(params.prior), TransitionOp::share_freezing(params.alpha)};
}

std::pair<Ehmm, TransitionOp> build_fs_learning(SegmentMode mode, double alpha,
                                                Ehmm union_model) {
  TransitionOp op = mode == SegmentMode::kFreezing
                        ? TransitionOp::share_freezing(alpha)
                        : TransitionOp::share_sleeping(alpha);
  return {std::move(union_model), op};
}

SegmentModel freeze_segment(Ehmm model, Segment seg) {
  return SegmentModel{std::move(model), seg, std::nullopt};
}

SegmentModel sleep_segment(Ehmm model, Segment seg) {
  std::optional<LogDist<StateId>> slept;
  if (seg.start > 1) slept = forwarded_initial(model, seg.start - 1);
  return SegmentModel{std::move(model), seg, std::move(slept)};
}

LogDist<StateId> forwarded_initial(const Ehmm& model, std::int64_t steps) {
  if (steps < 0) throw InvalidInput("forwarded_initial: negative step count");
  LogDist<StateId> dist = LogDist<StateId>::from_finite(model.initial());
  for (std::int64_t i = 0; i < steps; ++i) dist = advance_prior(model, dist);
  return dist;
}

Ehmm materialize_share(Ehmm base, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidInput("materialize_share: switching rate must be in [0,1]");
  auto shared = std::make_shared<const Ehmm>(std::move(base));
  auto transition = [shared, alpha](StateId q, StateRow& out) {
    StateRow row;
    if (alpha < 1.0) shared->transition(q, row);
    for (auto& [r, p] : row) p *= 1.0 - alpha;
    if (alpha > 0.0)
      for (const auto& [r, p] : shared->initial())
        row.emplace_back(r, alpha * p);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [r, p] : row) {
      if (!out.empty() && out.back().first == r)
        out.back().second += p;
      else
        out.emplace_back(r, p);
    }
  };
  auto production = [shared](StateId q, ExpertRow& out) {
    shared->production(q, out);
  };
  return Ehmm(shared->initial(), transition, production,
              shared->component_count());
}

}  // namespace ehmm
