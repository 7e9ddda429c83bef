#include "ehmm/oracles.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "ehmm/log_math.hpp"
#include "ehmm/segment_table.hpp"

namespace ehmm::oracle {

namespace {

struct PathEnumerator {
  const Ehmm& model;
  const ExpertAdvice& advice;
  std::span<const double> data;
  std::int64_t max_visits;
  std::int64_t visits = 0;
  std::vector<double> terms;
  StateRow row;
  ExpertRow prod;
  std::vector<double> expert_terms;

  double log_joint(StateId q, std::int64_t t) {
    model.production(q, prod);
    expert_terms.clear();
    for (const auto& [e, g] : prod)
      expert_terms.push_back(std::log(g) + advice.log_density(t, e, data[std::size_t(t - 1)]));
    return log_sum(expert_terms);
  }

  void walk(StateId q, std::int64_t t, double acc) {
    if (++visits > max_visits)
      throw LimitExceeded("path_sum: path enumeration guard exceeded");
    const double value = acc + log_joint(q, t);
    if (value == kNegInf) return;  // every extension stays at zero mass
    if (t == std::int64_t(data.size())) {
      terms.push_back(value);
      return;
    }
    model.transition(q, row);
    // The row buffer is reused across recursion, so copy it out first.
    const StateRow current = row;
    for (const auto& [r, p] : current) walk(r, t + 1, value + std::log(p));
  }
};

}  // namespace

double path_sum(const Ehmm& model, const ExpertAdvice& advice,
                std::span<const double> data, std::int64_t max_visits) {
  if (data.empty()) throw InvalidInput("path_sum: empty data");
  PathEnumerator walker{model, advice, data, max_visits};
  for (const auto& [q, p] : model.initial())
    walker.walk(q, 1, std::log(p));
  return -log_sum(walker.terms);
}

double segmentation_mixture(SegmentMode mode, double alpha,
                            const Ehmm& union_model,
                            const ExpertAdvice& advice,
                            std::span<const double> data,
                            std::int64_t max_horizon) {
  if (data.empty()) throw InvalidInput("segmentation_mixture: empty data");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidInput("segmentation_mixture: switching rate must be in [0,1]");
  const std::int64_t horizon = std::int64_t(data.size());
  if (horizon > max_horizon)
    throw LimitExceeded("segmentation_mixture: horizon guard exceeded");

  const SegmentLossTable table =
      build_segment_loss_table(mode, union_model, advice, data);

  const double log_alpha = std::log(alpha);
  const double log_stay = std::log1p(-alpha);
  const std::uint64_t masks = std::uint64_t{1} << (horizon - 1);
  std::vector<double> terms;
  terms.reserve(std::size_t(masks));
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const int cuts = int(std::popcount(mask));
    double term = 0.0;
    if (cuts > 0) term += double(cuts) * log_alpha;
    if (horizon - 1 - cuts > 0) term += double(horizon - 1 - cuts) * log_stay;
    if (term == kNegInf) continue;
    std::int64_t start = 1;
    for (std::int64_t t = 1; t < horizon; ++t) {
      if (mask & (std::uint64_t{1} << (t - 1))) {
        term -= table.at(start, t);
        start = t + 1;
      }
    }
    term -= table.at(start, horizon);
    terms.push_back(term);
  }
  return -log_sum(terms);
}

}  // namespace ehmm::oracle
