#include "twrelay/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace twrelay::gf2 {

namespace {

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

void require_same_length(const BitBlock& a, const BitBlock& b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

BitBlock::BitBlock(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitBlock::BitBlock(std::initializer_list<int> bits) : BitBlock(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, b);
}

BitBlock BitBlock::from_string(std::string_view bits) {
  BitBlock out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i, 1);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitBlock::from_string: expected only '0' and '1'");
    }
  }
  return out;
}

BitBlock BitBlock::from_uint(std::uint64_t value, std::size_t length) {
  if (length > 64) throw std::invalid_argument("BitBlock::from_uint: length exceeds 64");
  BitBlock out(length);
  if (length > 0) {
    const std::uint64_t mask = length == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
    out.words_[0] = value & mask;
  }
  return out;
}

int BitBlock::at(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("BitBlock::at: index out of range");
  return (*this)[i];
}

void BitBlock::set(std::size_t i, int bit) {
  if (i >= length_) throw std::out_of_range("BitBlock::set: index out of range");
  if (bit != 0 && bit != 1) throw std::invalid_argument("BitBlock::set: bit must be 0 or 1");
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (bit) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

void BitBlock::flip(std::size_t i) {
  if (i >= length_) throw std::out_of_range("BitBlock::flip: index out of range");
  words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

std::uint64_t BitBlock::to_uint() const {
  if (length_ > 64) throw std::logic_error("BitBlock::to_uint: length exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::string BitBlock::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

BitBlock& BitBlock::operator^=(const BitBlock& other) {
  require_same_length(*this, other, "xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitBlock(cols)) {}

BitMatrix::BitMatrix(std::vector<BitBlock> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) cols_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix: rows have unequal length");
  }
}

BitBlock BitMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("BitMatrix::column: index out of range");
  BitBlock out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r][c]) out.set(r, 1);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix out(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[r][c]) out.rows_[c].set(r, 1);
    }
  }
  return out;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (hamming_weight(r) != 0) return false;
  }
  return true;
}

BitBlock xor_blocks(const BitBlock& a, const BitBlock& b) { return a ^ b; }

BitBlock mat_vec_mul(const BitBlock& v, const BitMatrix& m) {
  if (v.size() != m.rows()) {
    throw std::invalid_argument("mat_vec_mul: vector length " + std::to_string(v.size()) +
                                " does not match matrix rows " + std::to_string(m.rows()));
  }
  BitBlock out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) out ^= m.row(i);
  }
  return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimensions differ");
  std::vector<BitBlock> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(mat_vec_mul(a.row(r), b));
  if (rows.empty()) return BitMatrix(0, b.cols());
  return BitMatrix(std::move(rows));
}

std::size_t hamming_weight(const BitBlock& v) noexcept {
  std::size_t w = 0;
  for (auto word : v.words()) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::size_t hamming_distance(const BitBlock& a, const BitBlock& b) {
  require_same_length(a, b, "hamming_distance");
  std::size_t d = 0;
  for (std::size_t w = 0; w < a.words().size(); ++w) {
    d += static_cast<std::size_t>(std::popcount(a.words()[w] ^ b.words()[w]));
  }
  return d;
}

std::size_t rank(const BitMatrix& m) {
  std::vector<BitBlock> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace twrelay::gf2
