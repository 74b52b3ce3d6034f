#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace twrelay::gf2 {

/// Fixed-length binary vector. Index 0 is the first transmitted bit.
///
/// Bits are packed into 64-bit words; bit i lives in word i / 64 at
/// position i % 64. Unused high bits of the last word are always zero.
class BitBlock {
 public:
  BitBlock() = default;
  explicit BitBlock(std::size_t length);
  BitBlock(std::initializer_list<int> bits);

  /// Parses a string of '0'/'1' characters, first character is index 0.
  static BitBlock from_string(std::string_view bits);
  /// Low `length` bits of `value`, bit 0 of `value` becomes index 0.
  static BitBlock from_uint(std::uint64_t value, std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  int operator[](std::size_t i) const noexcept {
    return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u);
  }
  int at(std::size_t i) const;
  void set(std::size_t i, int bit);
  void flip(std::size_t i);

  /// Integer view with index 0 as the least significant bit. Requires size() <= 64.
  std::uint64_t to_uint() const;
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  BitBlock& operator^=(const BitBlock& other);
  friend BitBlock operator^(BitBlock a, const BitBlock& b) { return a ^= b; }
  friend bool operator==(const BitBlock&, const BitBlock&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense binary matrix, rows stored as BitBlocks.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// Builds a matrix from equal-length rows.
  explicit BitMatrix(std::vector<BitBlock> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  int operator()(std::size_t r, std::size_t c) const noexcept { return rows_[r][c]; }
  void set(std::size_t r, std::size_t c, int bit) { rows_.at(r).set(c, bit); }

  const BitBlock& row(std::size_t r) const { return rows_.at(r); }
  BitBlock column(std::size_t c) const;

  BitMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitBlock> rows_;
};

BitBlock xor_blocks(const BitBlock& a, const BitBlock& b);

/// Row vector times matrix: result[j] = XOR over i of v[i] & m[i][j].
BitBlock mat_vec_mul(const BitBlock& v, const BitMatrix& m);

/// Matrix product over GF(2).
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

std::size_t hamming_weight(const BitBlock& v) noexcept;
std::size_t hamming_distance(const BitBlock& a, const BitBlock& b);

/// Rank over GF(2) by Gaussian elimination.
std::size_t rank(const BitMatrix& m);

}  // namespace twrelay::gf2
