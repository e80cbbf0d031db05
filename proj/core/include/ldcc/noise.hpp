#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ldcc/code.hpp"
#include "ldcc/pauli.hpp"
#include "ldcc/rng.hpp"

namespace ldcc {

/// IID Pauli channel. Probabilities must be non-negative and sum to 1
/// within 1e-12.
struct NoiseModel {
  double p_i = 1.0, p_x = 0.0, p_y = 0.0, p_z = 0.0;

  static NoiseModel create(double pi, double px, double py, double pz);

  double prob(Pauli p) const {
    switch (p) {
      case Pauli::I: return p_i;
      case Pauli::X: return p_x;
      case Pauli::Y: return p_y;
      case Pauli::Z: return p_z;
    }
    return 0.0;
  }
  /// Entries indexed by the Pauli bit pair x | z<<1.
  std::array<double, 4> probs_by_bits() const { return {p_i, p_x, p_z, p_y}; }
};

/// (1-p, p/3, p/3, p/3). Throws on p outside [0, 1].
NoiseModel depolarizing(double p);

struct Syndrome {
  std::vector<std::uint8_t> bits;  // bit i = 1 iff check g_i flipped
  bool operator==(const Syndrome&) const = default;
};

PauliString sample_error(const NoiseModel& noise, std::size_t n, Rng& rng);

/// bit i = symplectic_product(g_i, e).
Syndrome syndrome(const StabilizerCode& code, const PauliString& e);

/// Deterministic Pauli operator f with symplectic_product(g_i, f) = s_i for
/// all i, from a canonical GF(2) solve (left-to-right pivots over [x|z]
/// columns, free variables zero).
PauliString pure_error(const StabilizerCode& code, const Syndrome& s);

/// 1 - H2(p_I, p_X, p_Y, p_Z); base-2 entropy with 0 log 0 = 0.
double hashing_rate(const NoiseModel& noise);

/// The depolarizing p with hashing_rate(depolarizing(p)) = rate, found by
/// bisection on [0, 3/4] to 1e-8. Requires 0 < rate < 1.
double hashing_threshold(double rate);

}  // namespace ldcc
