#include "ehmm/forward.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ehmm {

namespace {

// Transition rows repeat a handful of probabilities (drift rate, stay rate,
// identity), so a tiny memo removes nearly all log() calls from the
// evolution loop.
class ProbLog {
 public:
  double operator()(double p) {
    if (p == 1.0) return 0.0;
    for (const auto& [key, lg] : memo_)
      if (key == p) return lg;
    const double lg = std::log(p);
    memo_[next_] = {p, lg};
    next_ = (next_ + 1) % memo_.size();
    return lg;
  }

 private:
  std::array<std::pair<double, double>, 6> memo_{};
  std::size_t next_ = 0;
};

using LogEntries = std::vector<std::pair<StateId, double>>;

// Pushes a log-domain distribution through the model's transition rows.
// Contributions are emitted source-major; when sources are sorted and each
// row's targets never precede the previous row's (true for chains, identity
// maps and block-diagonal unions of them) the stream is already sorted and
// grouping is a single pass. Otherwise a stable sort restores key order
// while keeping the deterministic source order within each target.
void push_through(const Ehmm& model, const LogEntries& in, StateRow& row,
                  ProbLog& plog, LogEntries& contrib, LogEntries& out) {
  contrib.clear();
  bool sorted = true;
  for (const auto& [q, lw] : in) {
    model.transition(q, row);
    for (const auto& [r, p] : row) {
      if (!contrib.empty() && r < contrib.back().first) sorted = false;
      contrib.emplace_back(r, lw + plog(p));
    }
  }
  if (!sorted)
    std::stable_sort(contrib.begin(), contrib.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
  out.clear();
  for (const auto& [r, lw] : contrib) {
    if (!out.empty() && out.back().first == r)
      out.back().second = log_add(out.back().second, lw);
    else
      out.emplace_back(r, lw);
  }
}

double log_sum_of(const LogEntries& entries) {
  double m = kNegInf;
  for (const auto& [k, w] : entries)
    if (w > m) m = w;
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (const auto& [k, w] : entries) s += std::exp(w - m);
  return m + std::log(s);
}

}  // namespace

LogDist<StateId> advance_prior(const Ehmm& model, const LogDist<StateId>& dist) {
  StateRow row;
  ProbLog plog;
  LogEntries contrib, out;
  push_through(model, dist.entries(), row, plog, contrib, out);
  return LogDist<StateId>::adopt_sorted(std::move(out));
}

ForwardState forward_init(const Ehmm& model, const TransitionOp& op) {
  ForwardState state;
  state.t = 1;
  state.weights = LogDist<StateId>::from_finite(model.initial());
  state.cum_log_loss = 0.0;
  if (op.kind == TransitionOp::Kind::kShare &&
      op.reset == TransitionOp::Reset::kForwarded)
    state.forwarded_prior = state.weights;
  return state;
}

ExpertDist predict(const ForwardState& state, const Ehmm& model) {
  ExpertRow prod;
  std::vector<std::pair<ExpertId, double>> contrib;
  for (const auto& [q, lw] : state.weights) {
    model.production(q, prod);
    for (const auto& [e, g] : prod)
      contrib.emplace_back(e, lw + (g == 1.0 ? 0.0 : std::log(g)));
  }
  std::stable_sort(contrib.begin(), contrib.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<ExpertId, double>> grouped;
  for (const auto& [e, lw] : contrib) {
    if (!grouped.empty() && grouped.back().first == e)
      grouped.back().second = log_add(grouped.back().second, lw);
    else
      grouped.emplace_back(e, lw);
  }
  double z = kNegInf;
  for (const auto& [e, lw] : grouped) z = log_add(z, lw);
  std::vector<ExpertDist::Entry> probs;
  probs.reserve(grouped.size());
  for (const auto& [e, lw] : grouped) {
    const double p = std::exp(lw - z);
    if (p > 0.0) probs.emplace_back(e, p);
  }
  return ExpertDist::from_entries(std::move(probs));
}

std::pair<ForwardState, double> observe(ForwardState state, const Ehmm& model,
                                        const TransitionOp& op,
                                        const ExpertAdvice& advice, double x) {
  const std::int64_t t = state.t;
  const auto& weights = state.weights.entries();

  // Joint per-state score: lambda(q) * sum_e Gamma_q(e) xi^e_t(x), shared
  // between the predictive loss and the loss update.
  LogEntries scored;
  scored.reserve(weights.size());
  std::vector<double> expert_terms;
  ExpertRow prod;
  for (const auto& [q, lw] : weights) {
    model.production(q, prod);
    double log_joint;
    if (prod.size() == 1) {
      const auto& [e, g] = prod.front();
      log_joint = (g == 1.0 ? 0.0 : std::log(g)) + advice.log_density(t, e, x);
    } else {
      expert_terms.clear();
      for (const auto& [e, g] : prod)
        expert_terms.push_back(std::log(g) + advice.log_density(t, e, x));
      log_joint = log_sum(expert_terms);
    }
    scored.emplace_back(q, lw + log_joint);
  }

  const double log_pred = log_sum_of(scored);
  if (log_pred == kNegInf) throw ZeroDensity(t);
  const double round_loss = -log_pred;

  // Loss update: condition on x and renormalize. States whose joint score
  // vanished leave the support.
  LogEntries posterior;
  posterior.reserve(scored.size());
  for (const auto& [q, s] : scored)
    if (s != kNegInf) posterior.emplace_back(q, s - log_pred);

  // The sleeping prior advances once per round no matter what alpha is,
  // keeping forwarded_prior = P^(t-1) pi as the round counter moves to t+1.
  const bool sleeping = op.kind == TransitionOp::Kind::kShare &&
                        op.reset == TransitionOp::Reset::kForwarded;
  if (sleeping)
    state.forwarded_prior = advance_prior(model, *state.forwarded_prior);

  // State evolution.
  StateRow row;
  ProbLog plog;
  LogEntries contrib, evolved;
  LogEntries next;
  if (op.kind == TransitionOp::Kind::kSparse || op.alpha == 0.0) {
    push_through(model, posterior, row, plog, contrib, next);
  } else {
    LogDist<StateId> initial_reset;
    const LogDist<StateId>* reset = &initial_reset;
    if (sleeping)
      reset = &*state.forwarded_prior;
    else
      initial_reset = LogDist<StateId>::from_finite(model.initial());
    if (op.alpha == 1.0) {
      next = reset->entries();
    } else {
      push_through(model, posterior, row, plog, contrib, evolved);
      const double log_stay = std::log1p(-op.alpha);
      const double log_switch = std::log(op.alpha);
      const auto& res = reset->entries();
      next.reserve(evolved.size() + res.size());
      std::size_t i = 0, j = 0;
      while (i < evolved.size() || j < res.size()) {
        if (j == res.size() ||
            (i < evolved.size() && evolved[i].first < res[j].first)) {
          next.emplace_back(evolved[i].first, log_stay + evolved[i].second);
          ++i;
        } else if (i == evolved.size() || res[j].first < evolved[i].first) {
          next.emplace_back(res[j].first, log_switch + res[j].second);
          ++j;
        } else {
          next.emplace_back(evolved[i].first,
                            log_add(log_stay + evolved[i].second,
                                    log_switch + res[j].second));
          ++i;
          ++j;
        }
      }
    }
  }

  state.weights = LogDist<StateId>::adopt_sorted(std::move(next));
  state.cum_log_loss += round_loss;
  state.t = t + 1;
  return {std::move(state), round_loss};
}

RunResult run_forward(const Ehmm& model, const TransitionOp& op,
                      const ExpertAdvice& advice,
                      std::span<const double> data) {
  return run_forward_from(model, op, advice, data, 1, nullptr);
}

void prune_weights_below(ForwardState& state, double threshold) {
  const auto& entries = state.weights.entries();
  double max_lw = kNegInf;
  for (const auto& [q, lw] : entries)
    if (lw > max_lw) max_lw = lw;
  LogEntries kept;
  kept.reserve(entries.size());
  for (const auto& [q, lw] : entries)
    if (lw >= threshold || lw == max_lw) kept.emplace_back(q, lw);
  state.weights = LogDist<StateId>::adopt_sorted(std::move(kept));
  state.weights.normalize();
}

RunResult run_forward_from(const Ehmm& model, const TransitionOp& op,
                           const ExpertAdvice& advice,
                           std::span<const double> data,
                           std::int64_t first_round,
                           const LogDist<StateId>* initial_override) {
  if (data.empty()) throw InvalidInput("run_forward: empty data");
  ForwardState state = forward_init(model, op);
  state.t = first_round;
  if (initial_override) {
    state.weights = *initial_override;
    if (state.forwarded_prior) state.forwarded_prior = *initial_override;
  }
  RunResult result;
  result.per_round_losses.reserve(data.size());
  result.active_counts.reserve(data.size());
  for (double x : data) {
    result.active_counts.push_back(std::int64_t(state.weights.size()));
    auto [next, loss] = observe(std::move(state), model, op, advice, x);
    state = std::move(next);
    result.per_round_losses.push_back(loss);
  }
  result.total_log_loss = state.cum_log_loss;
  return result;
}

}  // namespace ehmm
