#include <doctest.h>

#include <stdexcept>

#include <array>
#include <cmath>

#include "twrelay/sources.hpp"

using twrelay::CorrelationModel;
using twrelay::RandomStream;
namespace gf2 = twrelay::gf2;

TEST_CASE("ball sizes") {
  CHECK(CorrelationModel(15, 0).ball_size() == 1);
  CHECK(CorrelationModel(15, 1).ball_size() == 16);
  CHECK(CorrelationModel(15, 2).ball_size() == 121);
  CHECK(CorrelationModel(15, 3).ball_size() == 576);
  CHECK(CorrelationModel(15, 15).ball_size() == 32768);
  CHECK_THROWS_AS(CorrelationModel(15, 16), std::invalid_argument);
  CHECK_THROWS_AS(CorrelationModel(0, 0), std::invalid_argument);
}

TEST_CASE("t = 0 gives identical blocks") {
  const CorrelationModel model(15, 0);
  RandomStream rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto [c1, c2] = model.generate_pair(rng);
    CHECK(c1 == c2);
  }
}

TEST_CASE("t = 3 pairs never exceed the distance bound") {
  const CorrelationModel model(15, 3);
  RandomStream rng(2);
  std::size_t violations = 0;
  for (int i = 0; i < 100'000; ++i) {
    const auto [c1, c2] = model.generate_pair(rng);
    if (gf2::hamming_distance(c1, c2) > 3) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("t = 1 distance distribution is uniform over the 16-pattern ball") {
  const CorrelationModel model(15, 1);
  RandomStream rng(3);
  constexpr int kPairs = 1'000'000;
  int zero = 0;
  for (int i = 0; i < kPairs; ++i) {
    const auto [c1, c2] = model.generate_pair(rng);
    if (c1 == c2) ++zero;
  }
  const double p = 1.0 / 16.0;
  const double sigma = std::sqrt(p * (1 - p) / kPairs);
  CHECK(std::abs(zero / double(kPairs) - p) <= 3 * sigma);
}

TEST_CASE("c1 marginal is uniform per bit position") {
  const CorrelationModel model(15, 2);
  RandomStream rng(4);
  constexpr int kBlocks = 1'000'000;
  std::array<int, 15> ones{};
  for (int i = 0; i < kBlocks; ++i) {
    const auto c1 = model.generate_pair(rng).first;
    for (std::size_t j = 0; j < 15; ++j) ones[j] += c1[j];
  }
  const double sigma = std::sqrt(0.25 / kBlocks);
  for (int count : ones) CHECK(std::abs(count / double(kBlocks) - 0.5) <= 3 * sigma);
}

TEST_CASE("correlation factors") {
  CHECK(CorrelationModel(15, 3).correlation_factor() == doctest::Approx(0.60).epsilon(1e-12));
  CHECK(CorrelationModel(15, 2).correlation_factor() == doctest::Approx(11.0 / 15.0).epsilon(1e-12));
  CHECK(CorrelationModel(15, 1).correlation_factor() == doctest::Approx(13.0 / 15.0).epsilon(1e-12));
  CHECK(std::round(CorrelationModel(15, 2).correlation_factor() * 10000) / 100 == 73.33);
  CHECK(std::round(CorrelationModel(15, 1).correlation_factor() * 10000) / 100 == 86.67);
}
