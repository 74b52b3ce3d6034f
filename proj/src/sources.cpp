#include "twrelay/sources.hpp"

#include <stdexcept>
#include <string>

namespace twrelay {

namespace {

constexpr std::size_t kMaxBallSize = std::size_t{1} << 22;

std::uint64_t next_same_weight(std::uint64_t v) {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

CorrelationModel::CorrelationModel(std::size_t n, std::size_t t) : n_(n), t_(t) {
  if (n == 0 || n > 32) throw std::invalid_argument("CorrelationModel: n must be in [1, 32]");
  if (t > n) throw std::invalid_argument("CorrelationModel: t = " + std::to_string(t) + " exceeds n = " + std::to_string(n));

  std::size_t size = 0;
  std::uint64_t binom = 1;
  for (std::size_t w = 0; w <= t; ++w) {
    size += binom;
    binom = binom * (n - w) / (w + 1);
  }
  if (size > kMaxBallSize) throw std::invalid_argument("CorrelationModel: Hamming ball too large to enumerate");

  ball_.reserve(size);
  ball_.push_back(0);
  for (std::size_t w = 1; w <= t; ++w) {
    const std::uint64_t last = ((std::uint64_t{1} << w) - 1) << (n - w);
    for (std::uint64_t e = (std::uint64_t{1} << w) - 1;; e = next_same_weight(e)) {
      ball_.push_back(e);
      if (e == last) break;
    }
  }
}

MessagePair CorrelationModel::generate_pair(RandomStream& rng) const {
  const std::uint64_t mask = (std::uint64_t{1} << n_) - 1;
  const std::uint64_t c1 = rng() & mask;
  std::uniform_int_distribution<std::size_t> pick(0, ball_.size() - 1);
  const std::uint64_t e = ball_[pick(rng)];
  return {gf2::BitBlock::from_uint(c1, n_), gf2::BitBlock::from_uint(c1 ^ e, n_)};
}

double CorrelationModel::correlation_factor() const noexcept {
  return 1.0 - 2.0 * static_cast<double>(t_) / static_cast<double>(n_);
}

}  // namespace twrelay
