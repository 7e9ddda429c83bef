#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ehmm/constructions.hpp"
#include "ehmm/datagen.hpp"
#include "ehmm/forward.hpp"
#include "ehmm/oracles.hpp"

using namespace ehmm;

namespace {

double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }

ExpertDist uniform_experts(int n) {
  std::vector<ExpertId> ids;
  for (int e = 0; e < n; ++e) ids.push_back(ExpertId{e});
  return ExpertDist::uniform(ids);
}

FiniteDist<int> uniform_members(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return FiniteDist<int>::uniform(ids);
}

std::vector<double> ramp(double rate, int rounds) {
  std::vector<double> data;
  for (int t = 0; t < rounds; ++t) data.push_back(rate * t);
  return data;
}

}  // namespace

TEST_CASE("drifting-mean model structure") {
  SUBCASE("transition row splits stay/advance mass") {
    const auto model = build_dm({0.1});
    const auto row = model.transition_dist(StateId{0, 5});
    CHECK(row.size() == 2);
    CHECK(row.prob(StateId{0, 5}) == doctest::Approx(0.9));
    CHECK(row.prob(StateId{0, 6}) == doctest::Approx(0.1));
  }
  SUBCASE("no drift pins the first expert forever") {
    const GaussianAdvice advice;
    const auto model = build_dm({0.0});
    auto state = forward_init(model, TransitionOp::sparse());
    for (double x : {0.4, -0.2, 1.0, 3.0}) {
      const auto mix = predict(state, model);
      CHECK(mix.prob(ExpertId{0}) == 1.0);
      state = observe(std::move(state), model, TransitionOp::sparse(), advice, x)
                  .first;
    }
  }
  SUBCASE("deterministic drift marches one state per round") {
    const GaussianAdvice advice;
    const auto model = build_dm({1.0});
    auto state = forward_init(model, TransitionOp::sparse());
    for (int t = 1; t <= 5; ++t) {
      CHECK(state.weights.size() == 1);
      CHECK(state.weights.log_weight(StateId{0, t - 1}) == 0.0);
      state = observe(std::move(state), model, TransitionOp::sparse(), advice,
                      double(t - 1))
                  .first;
    }
  }
  SUBCASE("posterior support is exactly 0..t-1 for interior rates") {
    const GaussianAdvice advice;
    const auto model = build_dm({0.4});
    const auto run =
        run_forward(model, TransitionOp::sparse(), advice, ramp(0.4, 8));
    for (int t = 1; t <= 8; ++t) CHECK(run.active_counts[t - 1] == t);
  }
  SUBCASE("rate outside [0,1] is rejected") {
    CHECK_THROWS_AS(build_dm({1.5}), InvalidInput);
  }
}

TEST_CASE("Bayes mixture learns by reweighting") {
  SUBCASE("single expert is a constant chain") {
    const GaussianAdvice advice;
    const auto model = build_bayes(ExpertDist::point_mass(ExpertId{3}));
    const auto run = run_forward(model, TransitionOp::sparse(), advice,
                                 ramp(0.0, 4));
    for (std::int64_t c : run.active_counts) CHECK(c == 1);
  }
  SUBCASE("round-2 posterior equals the normalized round-1 densities") {
    const auto model = build_bayes(uniform_experts(2));
    const FunctionAdvice advice([](std::int64_t, ExpertId e, double) {
      return e.value == 0 ? 0.8 : 0.2;
    });
    auto state = forward_init(model, TransitionOp::sparse());
    state =
        observe(std::move(state), model, TransitionOp::sparse(), advice, 0.0)
            .first;
    const auto mix = predict(state, model);
    CHECK(mix.prob(ExpertId{0}) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(mix.prob(ExpertId{1}) == doctest::Approx(0.2).epsilon(1e-12));
  }
  SUBCASE("posterior after three rounds is the normalized density product") {
    // densities[t][e] for two experts over three rounds
    const double densities[3][2] = {{0.7, 0.4}, {0.2, 0.5}, {0.9, 0.3}};
    const FunctionAdvice advice([&](std::int64_t t, ExpertId e, double) {
      return densities[t - 1][e.value];
    });
    const auto prior =
        ExpertDist::from_entries({{ExpertId{0}, 0.25}, {ExpertId{1}, 0.75}});
    const auto model = build_bayes(prior);
    auto state = forward_init(model, TransitionOp::sparse());
    for (int t = 0; t < 3; ++t)
      state =
          observe(std::move(state), model, TransitionOp::sparse(), advice, 0.0)
              .first;
    double w0 = 0.25, w1 = 0.75;
    for (int t = 0; t < 3; ++t) {
      w0 *= densities[t][0];
      w1 *= densities[t][1];
    }
    const auto mix = predict(state, model);
    CHECK(mix.prob(ExpertId{0}) ==
          doctest::Approx(w0 / (w0 + w1)).epsilon(1e-12));
    CHECK(mix.prob(ExpertId{1}) ==
          doctest::Approx(w1 / (w0 + w1)).epsilon(1e-12));
  }
}

TEST_CASE("union of models") {
  const GaussianAdvice advice;

  SUBCASE("single member with full weight reproduces the member") {
    const auto member = build_dm({0.3});
    const auto union_model = build_bayes_union(
        FiniteDist<int>::point_mass(0), {member});
    const auto data = ramp(0.3, 6);
    const auto a = run_forward(member, TransitionOp::sparse(), advice, data);
    const auto b =
        run_forward(union_model, TransitionOp::sparse(), advice, data);
    for (std::size_t i = 0; i < data.size(); ++i)
      CHECK(b.per_round_losses[i] ==
            doctest::Approx(a.per_round_losses[i]).epsilon(1e-15));
  }
  SUBCASE("union of single-state members collapses to Bayes on experts") {
    const std::vector<Ehmm> members = {
        build_bayes(ExpertDist::point_mass(ExpertId{0})),
        build_bayes(ExpertDist::point_mass(ExpertId{1}))};
    const auto union_model = build_bayes_union(uniform_members(2), members);
    const auto bayes = build_bayes(uniform_experts(2));
    const auto data = ramp(0.5, 5);
    const auto a = run_forward(bayes, TransitionOp::sparse(), advice, data);
    const auto b =
        run_forward(union_model, TransitionOp::sparse(), advice, data);
    for (std::size_t i = 0; i < data.size(); ++i)
      CHECK(b.per_round_losses[i] ==
            doctest::Approx(a.per_round_losses[i]).epsilon(1e-15));
  }
  SUBCASE("joint probability is the prior-weighted member mixture") {
    const std::vector<double> data{0.0, 0.4, 0.9, 1.1};
    const std::vector<Ehmm> members = {build_dm({0.2}),
                                       build_bayes(uniform_experts(2))};
    const auto prior = FiniteDist<int>::from_entries({{0, 0.6}, {1, 0.4}});
    const auto union_model = build_bayes_union(prior, members);
    const double union_loss =
        run_forward(union_model, TransitionOp::sparse(), advice, data)
            .total_log_loss;
    // member joints via the independent path enumeration
    const double j0 = -oracle::path_sum(members[0], advice, data);
    const double j1 = -oracle::path_sum(members[1], advice, data);
    const double expected = -log_add(std::log(0.6) + j0, std::log(0.4) + j1);
    CHECK(union_loss == doctest::Approx(expected).epsilon(1e-9));
  }
  SUBCASE("prior must cover exactly the member list") {
    std::vector<Ehmm> members = {build_dm({0.1}), build_dm({0.3})};
    CHECK_THROWS_AS(
        build_bayes_union(FiniteDist<int>::point_mass(0), members),
        InvalidInput);
    CHECK_THROWS_AS(
        build_bayes_union(
            FiniteDist<int>::from_entries({{0, 0.5}, {2, 0.5}}), members),
        InvalidInput);
    CHECK_THROWS_AS(build_bayes_union(uniform_members(1), {}), InvalidInput);
  }
}

TEST_CASE("fixed share over base experts") {
  const GaussianAdvice advice;
  const std::vector<double> data{0.2, 0.9, 0.1, 1.3};

  SUBCASE("zero switching rate degenerates to Bayes") {
    auto [model, op] = build_fixed_share({0.0, uniform_experts(3)});
    const auto bayes = build_bayes(uniform_experts(3));
    const auto a = run_forward(bayes, TransitionOp::sparse(), advice, data);
    const auto b = run_forward(model, op, advice, data);
    for (std::size_t i = 0; i < data.size(); ++i)
      CHECK(b.per_round_losses[i] == a.per_round_losses[i]);
  }
  SUBCASE("full switching predicts with the prior every round") {
    const auto prior =
        ExpertDist::from_entries({{ExpertId{0}, 0.3}, {ExpertId{1}, 0.7}});
    auto [model, op] = build_fixed_share({1.0, prior});
    auto state = forward_init(model, op);
    for (double x : data) {
      const auto mix = predict(state, model);
      CHECK(mix.prob(ExpertId{0}) == doctest::Approx(0.3).epsilon(1e-12));
      CHECK(mix.prob(ExpertId{1}) == doctest::Approx(0.7).epsilon(1e-12));
      state = observe(std::move(state), model, op, advice, x).first;
    }
  }
  SUBCASE("two-round joint is the two-segmentation mixture") {
    const std::vector<double> xs{0.4, 1.2};
    auto [model, op] = build_fixed_share({0.5, uniform_experts(2)});
    const double loss = run_forward(model, op, advice, xs).total_log_loss;
    auto bayes_joint = [&](std::vector<double> seg_data) {
      double j = 0.0;
      for (int e = 0; e < 2; ++e) {
        double prod = 0.5;
        for (double x : seg_data) prod *= phi(x - e);
        j += prod;
      }
      return j;
    };
    const double expected =
        -std::log(0.5 * bayes_joint({xs[0], xs[1]}) +
                  0.5 * bayes_joint({xs[0]}) * bayes_joint({xs[1]}));
    CHECK(loss == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("frozen and slept segment models") {
  const GaussianAdvice advice;

  SUBCASE("freezing at round 1 is the original model") {
    const auto model = build_dm({0.25});
    const auto data = ramp(0.25, 7);
    const auto original =
        run_forward(model, TransitionOp::sparse(), advice, data);
    const auto frozen = freeze_segment(model, Segment(1, 7));
    const auto slept = sleep_segment(model, Segment(1, 7));
    CHECK_FALSE(frozen.initial_override.has_value());
    CHECK_FALSE(slept.initial_override.has_value());
    const auto frozen_run = run_forward_from(
        frozen.model, TransitionOp::sparse(), advice, data, 1, nullptr);
    CHECK(frozen_run.total_log_loss == original.total_log_loss);
  }
  SUBCASE("frozen drifting mean restarts from mean zero") {
    const auto sm = freeze_segment(build_dm({0.2}), Segment(3, 5));
    CHECK(sm.seg == Segment(3, 5));
    CHECK_FALSE(sm.initial_override.has_value());
  }
  SUBCASE("slept deterministic drift lands on mean start-1") {
    const auto sm = sleep_segment(build_dm({1.0}), Segment(4, 6));
    REQUIRE(sm.initial_override.has_value());
    CHECK(sm.initial_override->size() == 1);
    CHECK(sm.initial_override->log_weight(StateId{0, 3}) == 0.0);
  }
  SUBCASE("identity transitions make sleeping equal freezing") {
    const auto model = build_bayes(uniform_experts(3));
    for (const Segment seg : {Segment(1, 4), Segment(3, 6), Segment(6, 6)}) {
      const auto slept = sleep_segment(model, seg);
      if (slept.initial_override) {
        const auto direct = LogDist<StateId>::from_finite(model.initial());
        REQUIRE(slept.initial_override->size() == direct.size());
        for (std::size_t i = 0; i < direct.size(); ++i) {
          CHECK(slept.initial_override->entries()[i].first ==
                direct.entries()[i].first);
          CHECK(slept.initial_override->entries()[i].second ==
                doctest::Approx(direct.entries()[i].second).epsilon(1e-15));
        }
      }
    }
  }
  SUBCASE("forwarded initial of a deterministic chain") {
    const auto dist = forwarded_initial(build_dm({1.0}), 3);
    CHECK(dist.size() == 1);
    CHECK(dist.log_weight(StateId{0, 3}) == 0.0);
  }
}

TEST_CASE("fixed share over learning experts") {
  const GaussianAdvice advice;
  const auto union_model = build_bayes_union(
      uniform_members(2), {build_dm({0.1}), build_dm({0.3})});

  SUBCASE("zero switching rate is the plain union, both modes") {
    const auto data = ramp(0.3, 8);
    const auto plain =
        run_forward(union_model, TransitionOp::sparse(), advice, data);
    for (SegmentMode mode : {SegmentMode::kFreezing, SegmentMode::kSleeping}) {
      auto [model, op] = build_fs_learning(mode, 0.0, union_model);
      const auto run = run_forward(model, op, advice, data);
      for (std::size_t i = 0; i < data.size(); ++i)
        CHECK(run.per_round_losses[i] == plain.per_round_losses[i]);
    }
  }
  SUBCASE("single-state members collapse to classic fixed share") {
    const std::vector<Ehmm> members = {
        build_bayes(ExpertDist::point_mass(ExpertId{0})),
        build_bayes(ExpertDist::point_mass(ExpertId{1}))};
    const auto base = build_bayes_union(uniform_members(2), members);
    auto [fs_model, fs_op] = build_fixed_share({0.3, uniform_experts(2)});
    const std::vector<double> data{0.1, 1.2, 0.4, 0.8, 1.9};
    const auto classic = run_forward(fs_model, fs_op, advice, data);
    for (SegmentMode mode : {SegmentMode::kFreezing, SegmentMode::kSleeping}) {
      auto [model, op] = build_fs_learning(mode, 0.3, base);
      const auto run = run_forward(model, op, advice, data);
      for (std::size_t i = 0; i < data.size(); ++i)
        CHECK(run.per_round_losses[i] ==
              doctest::Approx(classic.per_round_losses[i]).epsilon(1e-12));
    }
  }
  SUBCASE("identity-transition unions: freezing equals sleeping") {
    const std::vector<Ehmm> members = {build_bayes(uniform_experts(2)),
                                       build_bayes(ExpertDist::from_entries(
                                           {{ExpertId{2}, 0.5},
                                            {ExpertId{3}, 0.5}}))};
    const auto base = build_bayes_union(uniform_members(2), members);
    const std::vector<double> data{0.5, 2.1, 3.3, 0.2, 1.7, 2.9};
    auto [fr_model, fr_op] =
        build_fs_learning(SegmentMode::kFreezing, 0.25, base);
    auto [sl_model, sl_op] =
        build_fs_learning(SegmentMode::kSleeping, 0.25, base);
    const auto fr = run_forward(fr_model, fr_op, advice, data);
    const auto sl = run_forward(sl_model, sl_op, advice, data);
    for (std::size_t i = 0; i < data.size(); ++i)
      CHECK(fr.per_round_losses[i] ==
            doctest::Approx(sl.per_round_losses[i]).epsilon(1e-12));
  }
  SUBCASE("ten-round run equals the segmentation mixture") {
    const auto data = ramp(0.2, 10);
    for (SegmentMode mode : {SegmentMode::kFreezing, SegmentMode::kSleeping}) {
      auto [model, op] = build_fs_learning(mode, 0.3, union_model);
      const double run_loss =
          run_forward(model, op, advice, data).total_log_loss;
      const double oracle_loss =
          oracle::segmentation_mixture(mode, 0.3, union_model, advice, data);
      CHECK(run_loss == doctest::Approx(oracle_loss).epsilon(1e-9));
    }
  }
}

TEST_CASE("materialized share transition rows") {
  const GaussianAdvice advice;
  const std::vector<double> data{0.3, 1.4, 0.2};
  auto [model, op] = build_fixed_share({0.4, uniform_experts(2)});
  const auto materialized = materialize_share(model, 0.4);
  const auto via_op = run_forward(model, op, advice, data);
  const auto via_rows =
      run_forward(materialized, TransitionOp::sparse(), advice, data);
  for (std::size_t i = 0; i < data.size(); ++i)
    CHECK(via_rows.per_round_losses[i] ==
          doctest::Approx(via_op.per_round_losses[i]).epsilon(1e-12));
  // rows stay valid distributions
  const auto row = materialized.transition_dist(StateId{0, 0});
  CHECK(row.prob(StateId{0, 0}) == doctest::Approx(0.6 + 0.2));
  CHECK(row.prob(StateId{0, 1}) == doctest::Approx(0.2));
}
