#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "twrelay/gf2.hpp"
#include "twrelay/random.hpp"

namespace twrelay {

using MessagePair = std::pair<gf2::BitBlock, gf2::BitBlock>;

/// Constrained correlation model: the two n-bit source blocks differ in at
/// most t positions. The difference pattern is drawn uniformly from the
/// Hamming ball of radius t, which is enumerated once at construction.
class CorrelationModel {
 public:
  CorrelationModel(std::size_t n, std::size_t t);

  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }
  /// Number of patterns of weight <= t.
  std::size_t ball_size() const noexcept { return ball_.size(); }

  /// c1 uniform over {0,1}^n, c2 = c1 xor e.
  MessagePair generate_pair(RandomStream& rng) const;

  /// Worst-case normalized correlation, 1 - 2t/n.
  double correlation_factor() const noexcept;

 private:
  std::size_t n_;
  std::size_t t_;
  std::vector<std::uint64_t> ball_;
};

}  // namespace twrelay
