#pragma once

#include <cstdint>
#include <random>

namespace twrelay {

/// The random stream every stochastic operation draws from.
using RandomStream = std::mt19937_64;

/// Independent stream for one (master seed, point, batch) triple. The
/// derivation depends only on the three values, never on scheduling.
inline RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t point_index,
                                  std::uint64_t batch_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(point_index), static_cast<std::uint32_t>(point_index >> 32),
                    static_cast<std::uint32_t>(batch_index), static_cast<std::uint32_t>(batch_index >> 32)};
  return RandomStream(seq);
}

}  // namespace twrelay
