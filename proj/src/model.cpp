#include "ehmm/model.hpp"

#include <algorithm>

namespace ehmm {

namespace {

std::vector<StateId> initial_support(const Ehmm& model) {
  std::vector<StateId> states;
  states.reserve(model.initial().size());
  for (const auto& [q, p] : model.initial()) states.push_back(q);
  return states;
}

std::vector<StateId> step(const Ehmm& model, const std::vector<StateId>& from,
                          StateRow& scratch) {
  std::vector<StateId> next;
  for (StateId q : from) {
    model.transition(q, scratch);
    for (const auto& [r, p] : scratch) next.push_back(r);
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

}  // namespace

std::vector<std::int64_t> reachable_counts(const Ehmm& model,
                                           std::int64_t horizon) {
  std::vector<std::int64_t> counts;
  counts.reserve(horizon);
  StateRow scratch;
  std::vector<StateId> active = initial_support(model);
  for (std::int64_t t = 1; t <= horizon; ++t) {
    counts.push_back(std::int64_t(active.size()));
    if (t < horizon) active = step(model, active, scratch);
  }
  return counts;
}

std::vector<std::int64_t> reachable_prefix_union_counts(const Ehmm& model,
                                                        std::int64_t horizon) {
  std::vector<std::int64_t> counts;
  counts.reserve(horizon);
  StateRow scratch;
  std::vector<StateId> active = initial_support(model);
  std::vector<StateId> seen = active;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    counts.push_back(std::int64_t(seen.size()));
    if (t == horizon) break;
    active = step(model, active, scratch);
    std::vector<StateId> merged;
    merged.reserve(seen.size() + active.size());
    std::set_union(seen.begin(), seen.end(), active.begin(), active.end(),
                   std::back_inserter(merged));
    seen = std::move(merged);
  }
  return counts;
}

}  // namespace ehmm
