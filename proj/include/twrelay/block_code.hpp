#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "twrelay/gf2.hpp"

namespace twrelay {

/// Binary (n, k) linear block code with a complete syndrome -> coset-leader
/// table. Used as the binning code for syndrome-based Slepian-Wolf
/// compression: a message is represented by its syndrome, and the receiver
/// recovers the difference pattern from the XOR of two syndromes.
///
/// Instances are immutable after construction and safe to share across threads.
class LinearBlockCode {
 public:
  /// Cyclic code of length n generated by `generator_poly` (bit i is the
  /// coefficient of x^i). The polynomial must divide x^n + 1. When k <= 20
  /// the minimum distance is checked by enumeration against 2t + 1.
  static LinearBlockCode from_generator_polynomial(std::size_t n, std::uint64_t generator_poly,
                                                   std::size_t t);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t m() const noexcept { return n_ - k_; }
  std::size_t t() const noexcept { return t_; }
  std::uint64_t generator_polynomial() const noexcept { return generator_poly_; }

  /// Systematic generator [I_k | P], k x n.
  const gf2::BitMatrix& generator() const noexcept { return generator_; }
  /// Parity-check [P^T | I_m], m x n.
  const gf2::BitMatrix& parity_check() const noexcept { return parity_check_; }
  /// Leader for each syndrome value; index is the syndrome read with bit 0 least significant.
  const std::vector<gf2::BitBlock>& coset_leaders() const noexcept { return coset_leaders_; }

  /// s = word * H^T.
  gf2::BitBlock syndrome(const gf2::BitBlock& word) const;
  /// Minimum-weight error pattern with syndrome `s`.
  const gf2::BitBlock& decode_error_pattern(const gf2::BitBlock& s) const;
  /// Systematic encoding of a k-bit message.
  gf2::BitBlock encode(const gf2::BitBlock& message) const;

  double compression_ratio() const noexcept {
    return static_cast<double>(m()) / static_cast<double>(n_);
  }

 private:
  LinearBlockCode() = default;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::size_t t_ = 0;
  std::uint64_t generator_poly_ = 0;
  gf2::BitMatrix generator_;
  gf2::BitMatrix parity_check_;
  gf2::BitMatrix parity_check_t_;
  std::vector<gf2::BitBlock> coset_leaders_;
};

/// Narrow-sense binary BCH code of length 15: (15,11) t=1, (15,7) t=2, (15,5) t=3.
LinearBlockCode make_bch(std::size_t n, std::size_t k);

/// Syndrome -> minimum-weight pattern, filled breadth-first over pattern
/// weight. Within a weight, patterns are visited in increasing integer order,
/// so ties go to the numerically smallest pattern.
std::vector<gf2::BitBlock> build_coset_leader_table(const gf2::BitMatrix& parity_check);

/// Product of two GF(2) polynomials (bit i = coefficient of x^i).
std::uint64_t gf2_poly_mul(std::uint64_t a, std::uint64_t b);
/// Remainder of a divided by b over GF(2).
std::uint64_t gf2_poly_mod(std::uint64_t a, std::uint64_t b);

}  // namespace twrelay
