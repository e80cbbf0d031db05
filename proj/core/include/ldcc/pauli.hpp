#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ldcc {

/// Single-qubit Pauli in the binary symplectic convention: the enum value is
/// the bit pair x | z<<1, so I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool pauli_x_bit(Pauli p) { return static_cast<std::uint8_t>(p) & 1u; }
constexpr bool pauli_z_bit(Pauli p) { return static_cast<std::uint8_t>(p) & 2u; }
constexpr Pauli pauli_from_bits(bool x, bool z) {
  return static_cast<Pauli>(std::uint8_t(x) | (std::uint8_t(z) << 1));
}

char pauli_to_char(Pauli p);
Pauli pauli_from_char(char c);  // throws std::invalid_argument on bad input

/// n-qubit Pauli operator as x/z bit vectors. Phases are not stored here;
/// conjugation routines report signs separately.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : n_(n), x_(n, 0), z_(n, 0) {}

  static PauliString from_text(std::string_view text);
  static PauliString single_site(std::size_t n, std::size_t site, Pauli p);

  std::size_t num_qubits() const { return n_; }

  Pauli at(std::size_t j) const {
    return pauli_from_bits(x_[j] != 0, z_[j] != 0);
  }
  void set(std::size_t j, Pauli p) {
    x_[j] = pauli_x_bit(p) ? 1 : 0;
    z_[j] = pauli_z_bit(p) ? 1 : 0;
  }
  bool x_bit(std::size_t j) const { return x_[j] != 0; }
  bool z_bit(std::size_t j) const { return z_[j] != 0; }

  bool is_identity() const;
  std::size_t weight() const;

  struct Interval {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t length() const { return last - first + 1; }
  };
  /// Support interval [first non-identity site, last non-identity site];
  /// nullopt for the identity string.
  std::optional<Interval> support() const;

  /// Bitwise product (phases dropped). Sizes must match.
  void multiply_inplace(const PauliString& other);
  friend PauliString operator*(PauliString a, const PauliString& b) {
    a.multiply_inplace(b);
    return a;
  }

  std::string text() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> x_, z_;
};

/// Σ_j (a.x_j b.z_j ⊕ a.z_j b.x_j) mod 2; 0 iff a and b commute.
/// Throws std::invalid_argument on length mismatch.
int symplectic_product(const PauliString& a, const PauliString& b);

struct SignedPauli {
  Pauli pauli = Pauli::I;
  bool negative = false;
  bool operator==(const SignedPauli&) const = default;
};

/// Element of the 24-element single-qubit Clifford group (modulo phase),
/// represented by its conjugation action on X and Z.
struct SingleQubitClifford {
  std::uint8_t id = 0;
  SignedPauli image_of_x;
  SignedPauli image_of_z;
};

/// All 24 elements, fixed enumeration order; index == id.
const std::array<SingleQubitClifford, 24>& single_clifford_group();

/// Conjugation action g p g^dagger, sign included. apply(g, I) = (I, +).
SignedPauli apply_clifford(const SingleQubitClifford& g, Pauli p);

/// Composition acting as conjugation: (second ∘ first) p = second(first(p)).
SingleQubitClifford compose(const SingleQubitClifford& second,
                            const SingleQubitClifford& first);
SingleQubitClifford clifford_inverse(const SingleQubitClifford& g);

/// Lookup by images; throws if no group element matches.
std::uint8_t clifford_id_from_images(const SignedPauli& image_of_x,
                                     const SignedPauli& image_of_z);

struct PauliPairSign {
  Pauli a = Pauli::I;
  Pauli b = Pauli::I;
  bool negative = false;
  bool operator==(const PauliPairSign&) const = default;
};

/// iSWAP (a ⊗ b) iSWAP^dagger = ±(a' ⊗ b'). The table is a frozen constant
/// derived once from 4x4 complex-matrix conjugation; a regression test
/// re-derives it from matrices.
PauliPairSign conjugate_by_iswap(Pauli a, Pauli b);
/// Inverse action iSWAP^dagger (a ⊗ b) iSWAP.
PauliPairSign conjugate_by_iswap_inverse(Pauli a, Pauli b);

/// One layer of parallel iSWAPs pairing (p,p+1),(p+2,p+3),... for parity p.
/// Unpaired edge qubits idle.
struct TwoQubitLayer {
  int parity = 0;
};
struct SingleQubitLayer {
  std::vector<std::uint8_t> gate_ids;  // one id in [0,24) per qubit
};
using CircuitLayer = std::variant<TwoQubitLayer, SingleQubitLayer>;

/// Brickwork circuit: two-qubit iSWAP layers with alternating parity
/// (starting at 0) interleaved with single-qubit Clifford layers. `depth`
/// counts the two-qubit layers.
struct CliffordCircuit {
  std::size_t n = 0;
  int depth = 0;
  std::vector<CircuitLayer> layers;
};

struct SignedPauliString {
  PauliString op;
  bool negative = false;
};

/// Conjugates p by the circuit, layer by layer in circuit order.
SignedPauliString conjugate_string_signed(const CliffordCircuit& circuit,
                                          const PauliString& p);
PauliString conjugate_string(const CliffordCircuit& circuit,
                             const PauliString& p);

/// Conjugation by the inverse circuit (layers reversed, each inverted).
SignedPauliString conjugate_string_inverse_signed(const CliffordCircuit& circuit,
                                                  const PauliString& p);
PauliString conjugate_string_inverse(const CliffordCircuit& circuit,
                                     const PauliString& p);

}  // namespace ldcc
