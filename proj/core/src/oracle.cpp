#include "ldcc/oracle.hpp"

#include <bit>
#include <string>

namespace ldcc {

namespace {

double error_probability(const PauliString& e, const NoiseModel& noise) {
  double p = 1.0;
  for (std::size_t j = 0; j < e.num_qubits(); ++j) p *= noise.prob(e.at(j));
  return p;
}

void check_group_cap(const StabilizerCode& code, int max_group_bits) {
  if (static_cast<int>(code.num_checks()) > max_group_bits)
    throw ResourceError("brute force: " + std::to_string(code.num_checks()) +
                        " generators exceeds cap of " +
                        std::to_string(max_group_bits));
}

}  // namespace

double brute_coset_probability(const StabilizerCode& code, const PauliString& f_l,
                               const NoiseModel& noise, int max_group_bits) {
  check_group_cap(code, max_group_bits);
  if (f_l.num_qubits() != code.n_phys)
    throw std::invalid_argument("brute_coset_probability: f_L length mismatch");
  const std::size_t m = code.num_checks();
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    PauliString e = f_l;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t(1) << i)) e.multiply_inplace(code.checks[i]);
    sum += error_probability(e, noise);
  }
  return sum;
}

double brute_coset_probability_gray(const StabilizerCode& code,
                                    const PauliString& f_l,
                                    const NoiseModel& noise, int max_group_bits) {
  check_group_cap(code, max_group_bits);
  if (f_l.num_qubits() != code.n_phys)
    throw std::invalid_argument("brute_coset_probability: f_L length mismatch");
  const std::size_t m = code.num_checks();
  PauliString e = f_l;
  double sum = error_probability(e, noise);
  for (std::uint64_t i = 1; i < (std::uint64_t(1) << m); ++i) {
    // Gray step i-1 -> i flips exactly generator countr_zero(i).
    e.multiply_inplace(code.checks[std::countr_zero(i)]);
    sum += error_probability(e, noise);
  }
  return sum;
}

BruteDecodeResult brute_ml_decode(const StabilizerCode& code, const Syndrome& s,
                                  const NoiseModel& noise, std::size_t max_k,
                                  int max_group_bits) {
  check_group_cap(code, max_group_bits);
  if (code.k > max_k)
    throw ResourceError("brute_ml_decode: k = " + std::to_string(code.k) +
                        " exceeds cap of " + std::to_string(max_k));
  BruteDecodeResult result;
  result.pure_error = pure_error(code, s);
  const std::size_t k = code.k;
  const std::size_t n_classes = std::size_t(1) << (2 * k);
  result.table.resize(n_classes);
  result.marginals.assign(k, {0.0, 0.0, 0.0, 0.0});

  std::size_t best_index = 0;
  for (std::size_t index = 0; index < n_classes; ++index) {
    PauliString f_l = result.pure_error;
    for (std::size_t j = 0; j < k; ++j) {
      const int digit = static_cast<int>((index >> (2 * (k - 1 - j))) & 3u);
      if (digit == 1 || digit == 3) f_l.multiply_inplace(code.logical_x[j]);
      if (digit == 2 || digit == 3) f_l.multiply_inplace(code.logical_z[j]);
    }
    const double p = brute_coset_probability(code, f_l, noise, max_group_bits);
    result.table[index] = p;
    result.total += p;
    for (std::size_t j = 0; j < k; ++j)
      result.marginals[j][(index >> (2 * (k - 1 - j))) & 3u] += p;
    if (p > result.table[best_index]) best_index = index;
  }

  static constexpr Pauli kClassLabel[4] = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
  for (std::size_t j = 0; j < k; ++j)
    result.global_class.push_back(
        kClassLabel[(best_index >> (2 * (k - 1 - j))) & 3u]);
  return result;
}

}  // namespace ldcc
