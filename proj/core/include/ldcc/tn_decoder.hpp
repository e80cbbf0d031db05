#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ldcc/code.hpp"
#include "ldcc/errors.hpp"
#include "ldcc/noise.hpp"
#include "ldcc/pauli.hpp"

namespace ldcc {

struct ContractOptions {
  /// Hard cap on the number of sigma wires crossing the contraction
  /// boundary. Exceeding it raises ResourceError (2^width doubles of state).
  int width_cap_bits = 30;
};

/// Entry of the check tensor T^P (six binary indices). Zero whenever
/// sigma_u != sigma_d; with sigma=0 the identity on (i_x,i_z)=(j_x,j_z);
/// with sigma=1 the pair is offset by the generator's Pauli bits.
double check_tensor_entry(Pauli p, int i_x, int i_z, int j_x, int j_z,
                          int sigma_u, int sigma_d);

/// Per-site probability tensor: entries indexed by the incoming bit pair
/// (i_x | i_z<<1), with input bits flipped by the action of f_L on the site.
std::array<double, 4> probability_tensor(const NoiseModel& noise, Pauli f_l_site);

struct LayoutCell {
  std::uint32_t column = 0;
  std::uint32_t generator = 0;
  Pauli pauli = Pauli::I;
};

struct GeneratorPlacement {
  std::uint32_t column = 0;
  std::uint32_t first_row = 0;  // first support row (sigma wire spawns here)
  std::uint32_t last_row = 0;   // last support row (sigma wire retires here)
};

/// 2D grid of Fig.-2 type: one row per physical qubit, generators packed
/// into columns by first-fit over their support intervals so that no two
/// generators in a column overlap on any row.
struct TnLayout {
  std::size_t n_rows = 0;
  std::size_t n_columns = 0;
  std::vector<GeneratorPlacement> generators;   // index == input generator index
  std::vector<std::vector<LayoutCell>> rows;    // cells per row, column-sorted
  int width_bits() const { return static_cast<int>(n_columns); }
};

/// Throws std::invalid_argument on identity generators or length mismatch.
TnLayout build_layout(const std::vector<PauliString>& generators,
                      std::size_t n_phys);

/// Exact contraction of the layout against f_L: the natural log of the coset
/// probability sum over all sigma assignments. Row-sweep order with per-row
/// max-norm rescaling folded into an accumulated log scale. Returns -inf for
/// an exactly zero sum.
double contract(const TnLayout& layout, const PauliString& f_l,
                const NoiseModel& noise, const ContractOptions& opts = {});

/// Site-dependent variant; site_probs[row] is the probability tensor of
/// that site before the f_L flip.
double contract(const TnLayout& layout, const PauliString& f_l,
                const std::vector<std::array<double, 4>>& site_probs,
                const ContractOptions& opts = {});

/// All sigma wires pinned: the probability of the single group element
/// e(sigma), i.e. the product of per-site probabilities of f_L * e(sigma).
double contract_fixed_sigma(const TnLayout& layout, const PauliString& f_l,
                            const NoiseModel& noise,
                            const std::vector<std::uint8_t>& sigma);

/// Natural-log coset probability p(f_L * <checks + extra_generators>).
/// extra_generators realize marginalization over other logical qubits.
double coset_probability(const StabilizerCode& code, const PauliString& f_l,
                         const NoiseModel& noise,
                         const std::vector<PauliString>& extra_generators,
                         const ContractOptions& opts = {});

/// Cross-validation backend: the Tanner-graph TN collapsed onto the 1D
/// qubit chain (delta tensor per generator split along the chain, full-width
/// transfer steps, per-site rescaling). Same value as coset_probability.
double contract_tanner_chain(const StabilizerCode& code, const PauliString& f_l,
                             const NoiseModel& noise,
                             const std::vector<PauliString>& extra_generators,
                             const ContractOptions& opts = {});

enum class DecoderBackend : std::uint8_t { grid, chain };

struct DecodeOptions {
  DecoderBackend backend = DecoderBackend::grid;
  /// Reuse the shared row prefix across the four classes of one logical
  /// qubit (grid backend). Results are bit-identical to the uncached path.
  bool reuse_prefix = true;
  int width_cap_bits = 30;
};

struct DecodeResult {
  PauliString pure_error;
  /// Chosen class per logical qubit; ties resolved in the order I < X < Z < Y.
  std::vector<Pauli> classes;
  /// ln coset probabilities per logical qubit, in class order I, X, Z, Y.
  std::vector<std::array<double, 4>> log_probs;
  /// pure_error times the chosen encoded logical operators.
  PauliString correction;
};

/// Marginalized maximum-likelihood decoding: each logical qubit decoded
/// independently, with every other logical pair added to the generator list.
DecodeResult decode_marginal(const StabilizerCode& code, const Syndrome& s,
                             const NoiseModel& noise,
                             const DecodeOptions& opts = {});

}  // namespace ldcc
