#include <stdexcept>
#include <algorithm>
#include <set>

#include "doctest.h"
#include "ldcc/pauli.hpp"
#include "ldcc/rng.hpp"
#include "matrix_oracle.hpp"

using namespace ldcc;

TEST_CASE("pauli bit convention") {
  CHECK(pauli_from_bits(false, false) == Pauli::I);
  CHECK(pauli_from_bits(true, false) == Pauli::X);
  CHECK(pauli_from_bits(true, true) == Pauli::Y);
  CHECK(pauli_from_bits(false, true) == Pauli::Z);
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z})
    CHECK(pauli_from_bits(pauli_x_bit(p), pauli_z_bit(p)) == p);
}

TEST_CASE("pauli string text round trip and support") {
  const PauliString p = PauliString::from_text("IXZYI");
  CHECK(p.num_qubits() == 5);
  CHECK(p.text() == "IXZYI");
  CHECK(p.weight() == 3);
  const auto support = p.support();
  REQUIRE(support.has_value());
  CHECK(support->first == 1);
  CHECK(support->last == 3);
  CHECK(!PauliString(4).support().has_value());
  CHECK(PauliString(4).is_identity());
  CHECK_THROWS_AS(PauliString::from_text("AXB"), std::invalid_argument);
}

TEST_CASE("symplectic product examples") {
  const auto xi = PauliString::from_text("XI");
  const auto zi = PauliString::from_text("ZI");
  CHECK(symplectic_product(xi, xi) == 0);
  CHECK(symplectic_product(xi, zi) == 1);
  CHECK(symplectic_product(PauliString::from_text("YZ"),
                           PauliString::from_text("ZY")) == 0);
  CHECK_THROWS_AS(symplectic_product(xi, PauliString::from_text("X")),
                  std::invalid_argument);
}

TEST_CASE("symplectic product matches matrix commutator oracle") {
  Rng rng(0x5efc0de);
  constexpr const char* alphabet = "IXYZ";
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 1 + rng.uniform_below(3);
    std::string sa, sb;
    for (std::size_t j = 0; j < n; ++j) {
      sa += alphabet[rng.uniform_below(4)];
      sb += alphabet[rng.uniform_below(4)];
    }
    const PauliString a = PauliString::from_text(sa);
    const PauliString b = PauliString::from_text(sb);
    const auto ma = matrix_oracle::pauli_string_matrix(a);
    const auto mb = matrix_oracle::pauli_string_matrix(b);
    CHECK((symplectic_product(a, b) == 0) == matrix_oracle::commute(ma, mb));
  }
}

TEST_CASE("single-qubit Clifford group enumeration") {
  const auto& group = single_clifford_group();

  std::set<std::pair<int, int>> image_pairs;
  int images_of_x_equal_y = 0;
  for (const SingleQubitClifford& g : group) {
    CHECK(g.image_of_x.pauli != Pauli::I);
    CHECK(g.image_of_z.pauli != Pauli::I);
    CHECK(g.image_of_x.pauli != g.image_of_z.pauli);
    image_pairs.insert({static_cast<int>(g.image_of_x.pauli) * 2 + g.image_of_x.negative,
                        static_cast<int>(g.image_of_z.pauli) * 2 + g.image_of_z.negative});
    if (g.image_of_x.pauli == Pauli::Y) ++images_of_x_equal_y;
  }
  CHECK(image_pairs.size() == 24);
  CHECK(images_of_x_equal_y == 8);

  // identity and the Hadamard-like exchange are present
  CHECK_NOTHROW(clifford_id_from_images({Pauli::X, false}, {Pauli::Z, false}));
  CHECK_NOTHROW(clifford_id_from_images({Pauli::Z, false}, {Pauli::X, false}));
}

TEST_CASE("Clifford group matches the 2x2 unitary closure oracle") {
  const auto matrices = matrix_oracle::single_qubit_clifford_matrices();
  REQUIRE(matrices.size() == 24);

  std::set<std::array<int, 2>> oracle_pairs;
  for (const auto& u : matrices) {
    const auto ix = matrix_oracle::match_signed_pauli(
        matrix_oracle::conjugate(u, matrix_oracle::pauli_matrix(Pauli::X)));
    const auto iz = matrix_oracle::match_signed_pauli(
        matrix_oracle::conjugate(u, matrix_oracle::pauli_matrix(Pauli::Z)));
    REQUIRE(ix.has_value());
    REQUIRE(iz.has_value());
    oracle_pairs.insert({static_cast<int>(ix->pauli) * 2 + ix->negative,
                         static_cast<int>(iz->pauli) * 2 + iz->negative});
  }
  std::set<std::array<int, 2>> ours;
  for (const SingleQubitClifford& g : single_clifford_group())
    ours.insert({static_cast<int>(g.image_of_x.pauli) * 2 + g.image_of_x.negative,
                 static_cast<int>(g.image_of_z.pauli) * 2 + g.image_of_z.negative});
  CHECK(ours == oracle_pairs);
}

TEST_CASE("Clifford composition closure and inverses") {
  const auto& group = single_clifford_group();
  for (const SingleQubitClifford& a : group) {
    for (const SingleQubitClifford& b : group) {
      const SingleQubitClifford c = compose(a, b);
      // composition acts like sequential conjugation on Y as well
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        const SignedPauli mid = apply_clifford(b, p);
        SignedPauli expect = apply_clifford(a, mid.pauli);
        expect.negative ^= mid.negative;
        CHECK(apply_clifford(c, p) == expect);
      }
    }
    const SingleQubitClifford inv = clifford_inverse(a);
    const SingleQubitClifford round = compose(inv, a);
    CHECK(round.image_of_x == SignedPauli{Pauli::X, false});
    CHECK(round.image_of_z == SignedPauli{Pauli::Z, false});
  }
}

TEST_CASE("iSWAP table examples") {
  CHECK(conjugate_by_iswap(Pauli::I, Pauli::I) ==
        PauliPairSign{Pauli::I, Pauli::I, false});
  CHECK(conjugate_by_iswap(Pauli::Z, Pauli::I) ==
        PauliPairSign{Pauli::I, Pauli::Z, false});
  // weight-1 X spreads to weight 2 (the greedy construction relies on this)
  const PauliPairSign xi = conjugate_by_iswap(Pauli::X, Pauli::I);
  CHECK(xi.a != Pauli::I);
  CHECK(xi.b != Pauli::I);
}

TEST_CASE("iSWAP table equals the 4x4 matrix conjugation oracle") {
  const auto u = matrix_oracle::iswap_matrix();
  std::set<std::pair<int, int>> outputs;
  for (Pauli a : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
    for (Pauli b : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      const auto m = matrix_oracle::conjugate(
          u, matrix_oracle::kron(matrix_oracle::pauli_matrix(a),
                                 matrix_oracle::pauli_matrix(b)));
      const PauliPairSign expected = matrix_oracle::match_signed_pauli_pair(m);
      CHECK(conjugate_by_iswap(a, b) == expected);
      outputs.insert({static_cast<int>(expected.a), static_cast<int>(expected.b)});
      // inverse table inverts the forward action with the same sign
      const PauliPairSign inv = conjugate_by_iswap_inverse(expected.a, expected.b);
      CHECK(inv.a == a);
      CHECK(inv.b == b);
      CHECK(inv.negative == expected.negative);
    }
  }
  // the Pauli part is a permutation of the 16 pairs
  CHECK(outputs.size() == 16);
}

namespace {

CliffordCircuit random_circuit(std::size_t n, int depth, Rng& rng) {
  CliffordCircuit circuit;
  circuit.n = n;
  circuit.depth = depth;
  for (int layer = 0; layer < depth; ++layer) {
    circuit.layers.emplace_back(TwoQubitLayer{layer % 2});
    SingleQubitLayer gates;
    for (std::size_t q = 0; q < n; ++q)
      gates.gate_ids.push_back(static_cast<std::uint8_t>(rng.uniform_below(24)));
    circuit.layers.emplace_back(std::move(gates));
  }
  return circuit;
}

PauliString random_string(std::size_t n, Rng& rng) {
  PauliString p(n);
  for (std::size_t j = 0; j < n; ++j)
    p.set(j, static_cast<Pauli>(rng.uniform_below(4)));
  return p;
}

}  // namespace

TEST_CASE("conjugate_string basics") {
  const CliffordCircuit empty{4, 0, {}};
  const PauliString p = PauliString::from_text("XZIY");
  CHECK(conjugate_string(empty, p) == p);

  CliffordCircuit one_iswap{2, 1, {TwoQubitLayer{0}}};
  CHECK(conjugate_string(one_iswap, PauliString::from_text("ZI")) ==
        PauliString::from_text("IZ"));

  CHECK_THROWS_AS(conjugate_string(one_iswap, PauliString::from_text("ZII")),
                  std::invalid_argument);
}

TEST_CASE("conjugation light cone") {
  Rng rng(77);
  for (int rep = 0; rep < 25; ++rep) {
    const int d = 1 + static_cast<int>(rng.uniform_below(4));
    const std::size_t n = 8 + rng.uniform_below(8);
    const CliffordCircuit circuit = random_circuit(n, d, rng);
    const std::size_t site = rng.uniform_below(static_cast<std::uint32_t>(n));
    const PauliString out = conjugate_string(
        circuit, PauliString::single_site(n, site, Pauli::X));
    const auto support = out.support();
    REQUIRE(support.has_value());
    CHECK(out.weight() <= static_cast<std::size_t>(2 * d));
    CHECK(support->length() <= static_cast<std::size_t>(2 * d));
    // spread at most d per side
    CHECK(support->first + static_cast<std::size_t>(d) >= site);
    CHECK(support->last <= site + static_cast<std::size_t>(d));
  }
}

TEST_CASE("conjugation preserves symplectic products") {
  Rng rng(1234);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 4 + rng.uniform_below(6);
    const int d = 1 + static_cast<int>(rng.uniform_below(3));
    const CliffordCircuit circuit = random_circuit(n, d, rng);
    const PauliString a = random_string(n, rng);
    const PauliString b = random_string(n, rng);
    CHECK(symplectic_product(conjugate_string(circuit, a),
                             conjugate_string(circuit, b)) ==
          symplectic_product(a, b));
  }
}

TEST_CASE("conjugation round trip through the inverse circuit") {
  Rng rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 3 + rng.uniform_below(6);
    const CliffordCircuit circuit =
        random_circuit(n, 1 + static_cast<int>(rng.uniform_below(4)), rng);
    const PauliString p = random_string(n, rng);
    const SignedPauliString fwd = conjugate_string_signed(circuit, p);
    const SignedPauliString back = conjugate_string_inverse_signed(circuit, fwd.op);
    CHECK(back.op == p);
    // U p U^dag = s q implies U^dag q U = s p: same sign both ways
    CHECK(back.negative == fwd.negative);
  }
}
