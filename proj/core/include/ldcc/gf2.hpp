#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ldcc::gf2 {

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
        data_(rows * words_per_row_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = data_[r * words_per_row_ + c / 64];
    const std::uint64_t bit = std::uint64_t(1) << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  /// row[dst] ^= row[src]
  void xor_rows(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_per_row_; ++w)
      data_[dst * words_per_row_ + w] ^= data_[src * words_per_row_ + w];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_per_row_; ++w)
      std::swap(data_[a * words_per_row_ + w], data_[b * words_per_row_ + w]);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
  std::vector<std::uint64_t> data_;
};

/// In-place reduced row echelon form with pivots chosen left-to-right.
/// Returns the pivot column of each pivot row (size == rank).
std::vector<std::size_t> row_reduce(BitMatrix& m);

std::size_t rank(BitMatrix m);

/// Canonical solution of M x = rhs: free variables zero, pivot variables by
/// back-substitution from the RREF. nullopt if the system is inconsistent.
std::optional<std::vector<std::uint8_t>> solve(
    const BitMatrix& m, const std::vector<std::uint8_t>& rhs);

}  // namespace ldcc::gf2
