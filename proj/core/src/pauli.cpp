#include "ldcc/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldcc {

char pauli_to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("bad Pauli character: ") + c);
  }
}

PauliString PauliString::from_text(std::string_view text) {
  PauliString p(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) p.set(j, pauli_from_char(text[j]));
  return p;
}

PauliString PauliString::single_site(std::size_t n, std::size_t site, Pauli p) {
  if (site >= n) throw std::invalid_argument("single_site: site out of range");
  PauliString s(n);
  s.set(site, p);
  return s;
}

bool PauliString::is_identity() const {
  for (std::size_t j = 0; j < n_; ++j)
    if (x_[j] | z_[j]) return false;
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t j = 0; j < n_; ++j) w += (x_[j] | z_[j]) ? 1 : 0;
  return w;
}

std::optional<PauliString::Interval> PauliString::support() const {
  std::size_t first = n_, last = 0;
  bool any = false;
  for (std::size_t j = 0; j < n_; ++j) {
    if (x_[j] | z_[j]) {
      if (!any) first = j;
      last = j;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return Interval{first, last};
}

void PauliString::multiply_inplace(const PauliString& other) {
  if (other.n_ != n_) throw std::invalid_argument("PauliString size mismatch");
  for (std::size_t j = 0; j < n_; ++j) {
    x_[j] ^= other.x_[j];
    z_[j] ^= other.z_[j];
  }
}

std::string PauliString::text() const {
  std::string s(n_, 'I');
  for (std::size_t j = 0; j < n_; ++j) s[j] = pauli_to_char(at(j));
  return s;
}

int symplectic_product(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("symplectic_product: length mismatch");
  unsigned acc = 0;
  for (std::size_t j = 0; j < a.num_qubits(); ++j)
    acc ^= (unsigned(a.x_bit(j)) & unsigned(b.z_bit(j))) ^
           (unsigned(a.z_bit(j)) & unsigned(b.x_bit(j)));
  return static_cast<int>(acc);
}

namespace {

// p·q = i^t (p xor q) for single-qubit Paulis; t in {0,1,3}.
int pauli_mul_phase_exponent(Pauli p, Pauli q) {
  if (p == Pauli::I || q == Pauli::I || p == q) return 0;
  // cyclic X->Y->Z->X gives +i, anticyclic gives -i
  const bool cyclic = (p == Pauli::X && q == Pauli::Y) ||
                      (p == Pauli::Y && q == Pauli::Z) ||
                      (p == Pauli::Z && q == Pauli::X);
  return cyclic ? 1 : 3;
}

std::array<SingleQubitClifford, 24> build_clifford_group() {
  // Enumeration: image_of_x ranges over {X,Y,Z} x {+,-}; image_of_z over the
  // two remaining non-identity Paulis (in X<Y<Z order) x {+,-}.
  constexpr Pauli order[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  std::array<SingleQubitClifford, 24> group{};
  std::uint8_t id = 0;
  for (Pauli px : order) {
    for (int sx = 0; sx < 2; ++sx) {
      for (Pauli pz : order) {
        if (pz == px) continue;
        for (int sz = 0; sz < 2; ++sz) {
          group[id] = SingleQubitClifford{
              id, SignedPauli{px, sx != 0}, SignedPauli{pz, sz != 0}};
          ++id;
        }
      }
    }
  }
  return group;
}

const std::array<SingleQubitClifford, 24> kCliffordGroup = build_clifford_group();

// Frozen iSWAP conjugation table, indexed by 4*bits(a) + bits(b) with
// bits = x | z<<1. Derived from 4x4 complex-matrix conjugation and locked in
// by a regression test against an in-test matrix oracle.
constexpr PauliPairSign kIswapTable[16] = {
    /* I,I */ {Pauli::I, Pauli::I, false},
    /* I,X */ {Pauli::Y, Pauli::Z, false},
    /* I,Z */ {Pauli::Z, Pauli::I, false},
    /* I,Y */ {Pauli::X, Pauli::Z, true},
    /* X,I */ {Pauli::Z, Pauli::Y, false},
    /* X,X */ {Pauli::X, Pauli::X, false},
    /* X,Z */ {Pauli::I, Pauli::Y, false},
    /* X,Y */ {Pauli::Y, Pauli::X, false},
    /* Z,I */ {Pauli::I, Pauli::Z, false},
    /* Z,X */ {Pauli::Y, Pauli::I, false},
    /* Z,Z */ {Pauli::Z, Pauli::Z, false},
    /* Z,Y */ {Pauli::X, Pauli::I, true},
    /* Y,I */ {Pauli::Z, Pauli::X, true},
    /* Y,X */ {Pauli::X, Pauli::Y, false},
    /* Y,Z */ {Pauli::I, Pauli::X, true},
    /* Y,Y */ {Pauli::Y, Pauli::Y, false},
};

std::array<PauliPairSign, 16> build_iswap_inverse() {
  // U(a⊗b)U† = s(a'⊗b')  =>  U†(a'⊗b')U = s(a⊗b)
  std::array<PauliPairSign, 16> inv{};
  for (int idx = 0; idx < 16; ++idx) {
    const PauliPairSign& fwd = kIswapTable[idx];
    const int out = 4 * static_cast<int>(fwd.a) + static_cast<int>(fwd.b);
    inv[out] = PauliPairSign{static_cast<Pauli>(idx / 4),
                             static_cast<Pauli>(idx % 4), fwd.negative};
  }
  return inv;
}

const std::array<PauliPairSign, 16> kIswapInverse = build_iswap_inverse();

}  // namespace

const std::array<SingleQubitClifford, 24>& single_clifford_group() {
  return kCliffordGroup;
}

SignedPauli apply_clifford(const SingleQubitClifford& g, Pauli p) {
  switch (p) {
    case Pauli::I: return SignedPauli{Pauli::I, false};
    case Pauli::X: return g.image_of_x;
    case Pauli::Z: return g.image_of_z;
    case Pauli::Y: {
      // g(Y) = g(iXZ) = i g(X) g(Z); the product of the two distinct
      // anticommuting images is i^t times the third Pauli, t in {1,3}.
      const SignedPauli& ix = g.image_of_x;
      const SignedPauli& iz = g.image_of_z;
      const int t = pauli_mul_phase_exponent(ix.pauli, iz.pauli);
      const Pauli out = static_cast<Pauli>(static_cast<std::uint8_t>(ix.pauli) ^
                                           static_cast<std::uint8_t>(iz.pauli));
      const bool neg = ix.negative ^ iz.negative ^ (t == 1);
      return SignedPauli{out, neg};
    }
  }
  return SignedPauli{};
}

SingleQubitClifford compose(const SingleQubitClifford& second,
                            const SingleQubitClifford& first) {
  auto chain = [&](Pauli p) {
    const SignedPauli mid = apply_clifford(first, p);
    SignedPauli out = apply_clifford(second, mid.pauli);
    out.negative ^= mid.negative;
    return out;
  };
  const SignedPauli ix = chain(Pauli::X);
  const SignedPauli iz = chain(Pauli::Z);
  return kCliffordGroup[clifford_id_from_images(ix, iz)];
}

SingleQubitClifford clifford_inverse(const SingleQubitClifford& g) {
  for (const SingleQubitClifford& h : kCliffordGroup) {
    const SingleQubitClifford c = compose(h, g);
    if (c.image_of_x == SignedPauli{Pauli::X, false} &&
        c.image_of_z == SignedPauli{Pauli::Z, false})
      return h;
  }
  throw std::logic_error("clifford_inverse: no inverse found");
}

std::uint8_t clifford_id_from_images(const SignedPauli& image_of_x,
                                     const SignedPauli& image_of_z) {
  for (const SingleQubitClifford& g : kCliffordGroup)
    if (g.image_of_x == image_of_x && g.image_of_z == image_of_z) return g.id;
  throw std::invalid_argument("clifford_id_from_images: not a group element");
}

PauliPairSign conjugate_by_iswap(Pauli a, Pauli b) {
  return kIswapTable[4 * static_cast<int>(a) + static_cast<int>(b)];
}

PauliPairSign conjugate_by_iswap_inverse(Pauli a, Pauli b) {
  return kIswapInverse[4 * static_cast<int>(a) + static_cast<int>(b)];
}

namespace {

void apply_two_qubit_layer(PauliString& p, bool& negative, int parity,
                           bool inverse) {
  const std::size_t n = p.num_qubits();
  for (std::size_t a = static_cast<std::size_t>(parity); a + 1 < n; a += 2) {
    const PauliPairSign r = inverse
                                ? conjugate_by_iswap_inverse(p.at(a), p.at(a + 1))
                                : conjugate_by_iswap(p.at(a), p.at(a + 1));
    p.set(a, r.a);
    p.set(a + 1, r.b);
    negative ^= r.negative;
  }
}

void apply_single_qubit_layer(PauliString& p, bool& negative,
                              const SingleQubitLayer& layer, bool inverse) {
  const auto& group = single_clifford_group();
  for (std::size_t j = 0; j < p.num_qubits(); ++j) {
    const Pauli site = p.at(j);
    if (site == Pauli::I) continue;
    const SingleQubitClifford& g = group[layer.gate_ids[j]];
    const SignedPauli out =
        inverse ? apply_clifford(clifford_inverse(g), site)
                : apply_clifford(g, site);
    p.set(j, out.pauli);
    negative ^= out.negative;
  }
}

SignedPauliString conjugate_impl(const CliffordCircuit& circuit,
                                 const PauliString& p, bool inverse) {
  if (circuit.n != p.num_qubits())
    throw std::invalid_argument("conjugate_string: qubit count mismatch");
  SignedPauliString result{p, false};
  auto apply_layer = [&](const CircuitLayer& layer) {
    if (const auto* two = std::get_if<TwoQubitLayer>(&layer)) {
      apply_two_qubit_layer(result.op, result.negative, two->parity, inverse);
    } else {
      apply_single_qubit_layer(result.op, result.negative,
                               std::get<SingleQubitLayer>(layer), inverse);
    }
  };
  if (!inverse) {
    for (const CircuitLayer& layer : circuit.layers) apply_layer(layer);
  } else {
    for (auto it = circuit.layers.rbegin(); it != circuit.layers.rend(); ++it)
      apply_layer(*it);
  }
  return result;
}

}  // namespace

SignedPauliString conjugate_string_signed(const CliffordCircuit& circuit,
                                          const PauliString& p) {
  return conjugate_impl(circuit, p, false);
}

PauliString conjugate_string(const CliffordCircuit& circuit,
                             const PauliString& p) {
  return conjugate_impl(circuit, p, false).op;
}

SignedPauliString conjugate_string_inverse_signed(const CliffordCircuit& circuit,
                                                  const PauliString& p) {
  return conjugate_impl(circuit, p, true);
}

PauliString conjugate_string_inverse(const CliffordCircuit& circuit,
                                     const PauliString& p) {
  return conjugate_impl(circuit, p, true).op;
}

}  // namespace ldcc
