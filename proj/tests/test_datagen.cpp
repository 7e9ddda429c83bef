#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ehmm/datagen.hpp"

using namespace ehmm;

TEST_CASE("drift data generation") {
  SUBCASE("freezing restarts at zero on every boundary") {
    const DriftDatasetSpec spec{{{5, 0.2}, {3, 0.7}, {4, 0.1}},
                                SegmentMode::kFreezing};
    const auto data = gen_drift_data(spec);
    REQUIRE(std::int64_t(data.size()) == spec.horizon());
    CHECK(data[0] == 0.0);
    CHECK(data[5] == 0.0);   // round 6, second segment start
    CHECK(data[8] == 0.0);   // round 9, third segment start
    CHECK(data[4] == doctest::Approx(0.2 * 4));
    CHECK(data[7] == doctest::Approx(0.7 * 2));
  }
  SUBCASE("sleeping uses global time") {
    const DriftDatasetSpec spec{{{100, 0.1}, {100, 0.3}},
                                SegmentMode::kSleeping};
    const auto data = gen_drift_data(spec);
    CHECK(data[100] == doctest::Approx(30.0));  // round 101 at rate 0.3
    CHECK(data[99] == doctest::Approx(9.9));    // round 100 at rate 0.1
  }
  SUBCASE("rate zero gives all zeros") {
    const DriftDatasetSpec spec{{{100, 0.0}}, SegmentMode::kSleeping};
    for (double x : gen_drift_data(spec)) CHECK(x == 0.0);
  }
  SUBCASE("generation is deterministic") {
    const DriftDatasetSpec spec{{{50, 0.1}, {50, 0.3}},
                                SegmentMode::kSleeping, 0.25, 42};
    CHECK(gen_drift_data(spec) == gen_drift_data(spec));
    DriftDatasetSpec other = spec;
    other.seed = 43;
    CHECK(gen_drift_data(spec) != gen_drift_data(other));
  }
  SUBCASE("outputs are nondecreasing within each segment") {
    const DriftDatasetSpec spec{{{10, 0.1}, {10, 0.3}, {10, 0.1}},
                                SegmentMode::kSleeping};
    const auto data = gen_drift_data(spec);
    std::int64_t start = 0;
    for (const auto& s : spec.segments) {
      for (std::int64_t i = start + 1; i < start + s.length; ++i)
        CHECK(data[std::size_t(i)] >= data[std::size_t(i - 1)]);
      start += s.length;
    }
  }
  SUBCASE("constant-rate sleeping output is globally nondecreasing") {
    const DriftDatasetSpec spec{{{10, 0.2}, {10, 0.2}, {10, 0.2}},
                                SegmentMode::kSleeping};
    const auto data = gen_drift_data(spec);
    for (std::size_t i = 1; i < data.size(); ++i)
      CHECK(data[i] >= data[i - 1]);
  }
  SUBCASE("bad specs are rejected") {
    CHECK_THROWS_AS(gen_drift_data({{}, SegmentMode::kFreezing}), InvalidInput);
    CHECK_THROWS_AS(gen_drift_data({{{0, 0.1}}, SegmentMode::kFreezing}),
                    InvalidInput);
  }
}

TEST_CASE("experiment geometry") {
  const auto [sleeping, freezing] = fig2_specs();
  CHECK(sleeping.horizon() == 1000);
  CHECK(freezing.horizon() == 1000);
  CHECK(sleeping.mode == SegmentMode::kSleeping);
  CHECK(freezing.mode == SegmentMode::kFreezing);
  REQUIRE(sleeping.segments.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(sleeping.segments[i].length == 100);
    CHECK(sleeping.segments[i].rate ==
          doctest::Approx(i % 2 == 0 ? 0.1 : 0.3));
  }

  const auto sleeping_data = gen_drift_data(sleeping);
  CHECK(sleeping_data[99] == doctest::Approx(9.9));  // 0.1 * 99
  const auto freezing_data = gen_drift_data(freezing);
  // last outcome of the first rate-0.3 segment (rounds 101..200)
  CHECK(freezing_data[199] == doctest::Approx(0.3 * 99));

  const auto seg = spec_segmentation(sleeping);
  CHECK(seg.size() == 10);
  CHECK(seg.cells()[3] == Segment(301, 400));
  CHECK(seg.horizon() == 1000);
}

TEST_CASE("Gaussian advice is a symmetric unit normal") {
  const GaussianAdvice advice;
  CHECK(advice.density(1, ExpertId{0}, 0.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
  CHECK(advice.log_density(3, ExpertId{2}, 2.0) ==
        advice.log_density(9, ExpertId{2}, 2.0));  // time-independent

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t mu = std::int64_t(rng() % 50);
    const double d = u(rng);
    CHECK(advice.log_density(1, ExpertId{mu}, double(mu) + d) ==
          doctest::Approx(advice.log_density(1, ExpertId{mu}, double(mu) - d))
              .epsilon(1e-12));
  }
  // log densities stay finite far from the mean, where the plain density
  // underflows
  CHECK(advice.density(1, ExpertId{0}, 1000.0) == 0.0);
  CHECK(std::isfinite(advice.log_density(1, ExpertId{0}, 1000.0)));
}
