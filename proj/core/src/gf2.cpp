#include "ldcc/gf2.hpp"

#include <stdexcept>

namespace ldcc::gf2 {

std::vector<std::size_t> row_reduce(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t row = pivot_row;
    while (row < m.rows() && !m.get(row, col)) ++row;
    if (row == m.rows()) continue;
    m.swap_rows(pivot_row, row);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != pivot_row && m.get(r, col)) m.xor_rows(r, pivot_row);
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(BitMatrix m) { return row_reduce(m).size(); }

std::optional<std::vector<std::uint8_t>> solve(
    const BitMatrix& m, const std::vector<std::uint8_t>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("gf2::solve: rhs size");
  BitMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.get(r, c));
    aug.set(r, m.cols(), rhs[r] != 0);
  }
  const std::vector<std::size_t> pivots = row_reduce(aug);
  // A pivot in the augmented column means the system is inconsistent.
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<std::uint8_t> x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.get(i, m.cols()) ? 1 : 0;
  return x;
}

}  // namespace ldcc::gf2
