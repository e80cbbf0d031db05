#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ldcc/pauli.hpp"
#include "ldcc/rng.hpp"

namespace ldcc {

enum class CircuitVariant : std::uint8_t { standard, greedy };

std::string variant_name(CircuitVariant v);
CircuitVariant variant_from_name(std::string_view name);

/// Stabilizer code with k logical qubits on n_phys physical qubits.
/// checks[i] is the generator g_i whose measurement gives syndrome bit i.
/// logical_positions[j] is the pre-encoding single-site home of logical j.
struct StabilizerCode {
  std::size_t n_phys = 0;
  std::size_t k = 0;
  std::vector<PauliString> checks;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
  std::vector<std::size_t> logical_positions;

  // construction metadata
  std::size_t n = 0;  // pre-padding qubit count; nominal rate r = k/n
  int depth = 0;
  CircuitVariant variant = CircuitVariant::standard;
  std::uint64_t seed = 0;

  std::size_t num_checks() const { return checks.size(); }

  bool operator==(const StabilizerCode&) const = default;
};

/// Parameters of the standard pipeline. The rate is held as its integral
/// inverse: r = 1/inv_rate, so k = n/inv_rate must divide evenly.
struct CodeParams {
  std::size_t n = 0;
  std::size_t inv_rate = 0;
  int depth = 0;
  CircuitVariant variant = CircuitVariant::standard;
  std::uint64_t seed = 0;

  std::size_t k() const { return n / inv_rate; }
  double rate() const { return 1.0 / static_cast<double>(inv_rate); }
  /// Throws std::invalid_argument unless n, inv_rate, depth are consistent.
  void validate() const;
};

/// Trivial code: k logical sites at floor((j+1/2)n/k), every other site a
/// uniformly random single-site check from {X,Y,Z}; logicals are X/Z pairs.
StabilizerCode build_initial_code(std::size_t n, std::size_t k, Rng& rng);

/// Adds 4d - inv_rate + 1 boundary stabilizer qubits with random single-site
/// checks, split so every logical position ends up >= 2d sites from either
/// boundary.
StabilizerCode pad_boundary(const StabilizerCode& code, int depth,
                            std::size_t inv_rate, Rng& rng);

/// d iSWAP layers (alternating parity, starting at 0), each followed by an
/// independent uniform single-qubit Clifford on every qubit.
CliffordCircuit sample_circuit_standard(std::size_t n_phys, int depth, Rng& rng);

struct GreedyCircuit {
  StabilizerCode initial_code;  // input code with checks resampled from {X,Y}
  CliffordCircuit circuit;
};

/// Greedy variant: initial checks resampled uniformly from {X,Y}; before each
/// iSWAP layer the single-qubit gates are chosen to maximize the summed
/// post-iSWAP weight of all checks and logical generators (per upcoming gate
/// pair, jointly over 24x24 combinations; ties uniform at random).
GreedyCircuit sample_circuit_greedy(const StabilizerCode& initial, int depth,
                                    Rng& rng);

/// Conjugates every check and logical generator by the circuit. Signs are
/// dropped; syndrome extraction only uses anticommutation.
StabilizerCode encode(const StabilizerCode& code, const CliffordCircuit& circuit);

/// Full pipeline: build, pad, sample circuit (per variant), encode. The
/// first form derives its randomness from params.seed; the second draws from
/// the provided stream (params.seed is metadata only).
StabilizerCode generate_code(const CodeParams& params);
StabilizerCode generate_code(const CodeParams& params, Rng& rng);

/// Throws std::logic_error with a description if any StabilizerCode
/// invariant fails (check commutation, logical pair relations, GF(2)
/// independence of checks).
void check_code_invariants(const StabilizerCode& code);

/// Text serialization. Header `n_phys k d r variant seed` (r as a reduced
/// fraction), a `P:` line with logical positions, then C:/LX:/LZ: lines.
/// Round-trips bit-exactly.
std::string serialize_code(const StabilizerCode& code);
StabilizerCode parse_code(std::string_view text);

}  // namespace ldcc
