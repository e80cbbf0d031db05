#pragma once

#include <cstdint>
#include <vector>

#include "ldcc/code.hpp"
#include "ldcc/errors.hpp"
#include "ldcc/noise.hpp"
#include "ldcc/pauli.hpp"

namespace ldcc {

/// Exact coset probability by direct enumeration of all 2^(n-k) stabilizer
/// group elements; each e(sigma) is rebuilt from scratch. Hard-capped: this
/// is an oracle and never approximates.
double brute_coset_probability(const StabilizerCode& code, const PauliString& f_l,
                               const NoiseModel& noise, int max_group_bits = 24);

/// Same sum enumerated in Gray-code order with incremental single-generator
/// flips; guards the direct enumeration against indexing bugs.
double brute_coset_probability_gray(const StabilizerCode& code,
                                    const PauliString& f_l,
                                    const NoiseModel& noise,
                                    int max_group_bits = 24);

struct BruteDecodeResult {
  PauliString pure_error;
  /// Global maximum-likelihood class assignment (ties: lowest table index,
  /// i.e. lexicographic in the per-qubit order I < X < Z < Y).
  std::vector<Pauli> global_class;
  /// All 4^k coset probabilities; index = sum_j digit_j * 4^(k-1-j) with
  /// digit order I, X, Z, Y and qubit 0 most significant.
  std::vector<double> table;
  double total = 0.0;  // sum of the table == total syndrome probability
  /// Per-qubit marginals (class order I, X, Z, Y), summed over other qubits.
  std::vector<std::array<double, 4>> marginals;
};

/// Enumerates every logical class. Caps are hard errors.
BruteDecodeResult brute_ml_decode(const StabilizerCode& code, const Syndrome& s,
                                  const NoiseModel& noise, std::size_t max_k = 6,
                                  int max_group_bits = 20);

}  // namespace ldcc
