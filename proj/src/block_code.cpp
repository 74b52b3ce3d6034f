#include "twrelay/block_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace twrelay {

using gf2::BitBlock;
using gf2::BitMatrix;

namespace {

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Next integer with the same popcount (Gosper).
std::uint64_t next_same_weight(std::uint64_t v) {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

// Row-reduce a k x n generator so its first k columns form the identity.
BitMatrix systematic_form(const BitMatrix& g) {
  std::vector<BitBlock> rows;
  for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(g.row(r));
  const std::size_t k = rows.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && !rows[pivot][c]) ++pivot;
    if (pivot == k) throw std::invalid_argument("generator has no information set on its first k positions");
    std::swap(rows[c], rows[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r != c && rows[r][c]) rows[r] ^= rows[c];
    }
  }
  return BitMatrix(std::move(rows));
}

std::size_t min_distance_by_enumeration(const BitMatrix& g) {
  const std::size_t k = g.rows();
  std::size_t best = g.cols();
  for (std::uint64_t msg = 1; msg < (std::uint64_t{1} << k); ++msg) {
    BitBlock word(g.cols());
    for (std::size_t i = 0; i < k; ++i) {
      if ((msg >> i) & 1u) word ^= g.row(i);
    }
    best = std::min(best, gf2::hamming_weight(word));
  }
  return best;
}

}  // namespace

std::uint64_t gf2_poly_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (int i = 0; i < 64 && (b >> i); ++i) {
    if ((b >> i) & 1u) out ^= a << i;
  }
  return out;
}

std::uint64_t gf2_poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = poly_degree(b);
  if (db < 0) throw std::invalid_argument("gf2_poly_mod: division by zero polynomial");
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) a ^= b << (da - db);
  return a;
}

std::vector<BitBlock> build_coset_leader_table(const BitMatrix& parity_check) {
  const std::size_t m = parity_check.rows();
  const std::size_t n = parity_check.cols();
  if (m > 24 || n > 63) throw std::invalid_argument("build_coset_leader_table: code too large for a full table");

  // Column j of H as an m-bit integer: the syndrome of the unit pattern e_j.
  std::vector<std::uint64_t> column_syndrome(n);
  for (std::size_t j = 0; j < n; ++j) column_syndrome[j] = parity_check.column(j).to_uint();

  const std::size_t table_size = std::size_t{1} << m;
  std::vector<BitBlock> table(table_size);
  std::vector<bool> seen(table_size, false);
  std::size_t filled = 0;

  for (std::size_t w = 0; w <= n && filled < table_size; ++w) {
    const std::uint64_t last = w == 0 ? 0 : (((std::uint64_t{1} << w) - 1) << (n - w));
    for (std::uint64_t pattern = (std::uint64_t{1} << w) - 1;; pattern = next_same_weight(pattern)) {
      std::uint64_t s = 0;
      for (std::uint64_t rest = pattern; rest; rest &= rest - 1) s ^= column_syndrome[std::countr_zero(rest)];
      if (!seen[s]) {
        seen[s] = true;
        table[s] = BitBlock::from_uint(pattern, n);
        if (++filled == table_size) break;
      }
      if (pattern == last) break;
    }
  }
  if (filled != table_size) throw std::invalid_argument("build_coset_leader_table: parity-check matrix is rank deficient");
  return table;
}

LinearBlockCode LinearBlockCode::from_generator_polynomial(std::size_t n, std::uint64_t generator_poly,
                                                          std::size_t t) {
  if (n < 2 || n > 63) throw std::invalid_argument("from_generator_polynomial: n must be in [2, 63]");
  const int deg = poly_degree(generator_poly);
  if (deg < 1 || static_cast<std::size_t>(deg) >= n || (generator_poly & 1u) == 0) {
    throw std::invalid_argument("from_generator_polynomial: invalid generator polynomial");
  }
  const std::uint64_t x_n_plus_1 = (std::uint64_t{1} << n) | 1u;
  if (gf2_poly_mod(x_n_plus_1, generator_poly) != 0) {
    throw std::invalid_argument("from_generator_polynomial: generator does not divide x^n + 1");
  }

  LinearBlockCode code;
  code.n_ = n;
  code.k_ = n - static_cast<std::size_t>(deg);
  code.t_ = t;
  code.generator_poly_ = generator_poly;

  std::vector<BitBlock> rows;
  for (std::size_t i = 0; i < code.k_; ++i) rows.push_back(BitBlock::from_uint(generator_poly << i, n));
  const BitMatrix cyclic_generator(std::move(rows));

  if (code.k_ <= 20) {
    const std::size_t d = min_distance_by_enumeration(cyclic_generator);
    if (d < 2 * t + 1) {
      throw std::invalid_argument("from_generator_polynomial: minimum distance " + std::to_string(d) +
                                  " cannot correct t = " + std::to_string(t));
    }
  }

  code.generator_ = systematic_form(cyclic_generator);

  const std::size_t k = code.k_;
  const std::size_t m = n - k;
  code.parity_check_ = BitMatrix(m, n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < k; ++i) code.parity_check_.set(j, i, code.generator_(i, k + j));
    code.parity_check_.set(j, k + j, 1);
  }
  code.parity_check_t_ = code.parity_check_.transpose();
  code.coset_leaders_ = build_coset_leader_table(code.parity_check_);
  return code;
}

BitBlock LinearBlockCode::syndrome(const BitBlock& word) const {
  if (word.size() != n_) {
    throw std::invalid_argument("syndrome: word length " + std::to_string(word.size()) + " != n = " +
                                std::to_string(n_));
  }
  return gf2::mat_vec_mul(word, parity_check_t_);
}

const BitBlock& LinearBlockCode::decode_error_pattern(const BitBlock& s) const {
  if (s.size() != m()) {
    throw std::invalid_argument("decode_error_pattern: syndrome length " + std::to_string(s.size()) +
                                " != m = " + std::to_string(m()));
  }
  return coset_leaders_[s.to_uint()];
}

BitBlock LinearBlockCode::encode(const BitBlock& message) const {
  return gf2::mat_vec_mul(message, generator_);
}

LinearBlockCode make_bch(std::size_t n, std::size_t k) {
  if (n == 15) {
    switch (k) {
      case 11: return LinearBlockCode::from_generator_polynomial(15, 0b10011, 1);
      case 7: return LinearBlockCode::from_generator_polynomial(15, 0b111010001, 2);
      case 5: return LinearBlockCode::from_generator_polynomial(15, 0b10100110111, 3);
      default: break;
    }
  }
  throw std::invalid_argument("make_bch: unsupported code (" + std::to_string(n) + "," + std::to_string(k) +
                              "); supported: (15,5), (15,7), (15,11)");
}

}  // namespace twrelay
