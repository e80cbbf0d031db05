#include <map>
#include <stdexcept>

#include "doctest.h"
#include "ldcc/code.hpp"
#include "ldcc/gf2.hpp"
#include "ldcc/rng.hpp"

using namespace ldcc;

TEST_CASE("initial code basics") {
  Rng rng(1);
  const StabilizerCode tiny = build_initial_code(2, 1, rng);
  CHECK(tiny.n_phys == 2);
  CHECK(tiny.num_checks() == 1);
  CHECK(tiny.checks[0].weight() == 1);
  CHECK(tiny.logical_positions == std::vector<std::size_t>{1});
  CHECK(tiny.logical_x[0] == PauliString::from_text("IX"));
  CHECK(tiny.logical_z[0] == PauliString::from_text("IZ"));

  const StabilizerCode code = build_initial_code(10, 2, rng);
  CHECK(code.logical_positions == std::vector<std::size_t>{2, 7});
  CHECK(code.num_checks() == 8);
  check_code_invariants(code);

  CHECK_THROWS_AS(build_initial_code(5, 5, rng), std::invalid_argument);
  CHECK_THROWS_AS(build_initial_code(5, 0, rng), std::invalid_argument);
}

TEST_CASE("initial checks are uniform over X, Y, Z") {
  Rng rng(20240917);
  std::map<char, int> counts;
  const int samples = 3000;
  for (int i = 0; i < samples; ++i) {
    const StabilizerCode code = build_initial_code(4, 1, rng);
    counts[code.checks[0].text()[0]] += 1;
  }
  for (char c : {'X', 'Y', 'Z'}) {
    const double freq = counts[c] / static_cast<double>(samples);
    CHECK(freq == doctest::Approx(1.0 / 3.0).epsilon(0.09));  // 1/3 +- 0.03
  }
}

TEST_CASE("boundary padding") {
  Rng rng(5);
  const StabilizerCode initial = build_initial_code(50, 10, rng);
  const StabilizerCode padded = pad_boundary(initial, 6, 5, rng);
  CHECK(padded.n_phys == 70);  // 50 + 24 - 5 + 1
  CHECK(padded.k == 10);
  CHECK(padded.num_checks() == 60);
  check_code_invariants(padded);
  for (std::size_t pos : padded.logical_positions) {
    CHECK(pos >= 12);
    CHECK(padded.n_phys - 1 - pos >= 12);
  }

  // 4d - 1/r + 1 = 0: formula still applied, no qubits added
  const StabilizerCode start9 = build_initial_code(18, 2, rng);
  const StabilizerCode same = pad_boundary(start9, 2, 9, rng);
  CHECK(same.n_phys == 18);

  // negative padding is rejected
  const StabilizerCode start10 = build_initial_code(20, 2, rng);
  CHECK_THROWS_AS(pad_boundary(start10, 1, 10, rng), std::invalid_argument);
}

TEST_CASE("padding margin audit over random parameter sets") {
  Rng rng(88);
  int tested = 0;
  while (tested < 100) {
    const std::size_t inv_rate = 2 + rng.uniform_below(9);   // 2..10
    const int d = 1 + static_cast<int>(rng.uniform_below(6));  // 1..6
    if (4 * d + 1 < static_cast<int>(inv_rate)) continue;      // negative padding
    const std::size_t k = 2 + rng.uniform_below(5);
    const std::size_t n = k * inv_rate;
    const StabilizerCode initial = build_initial_code(n, k, rng);
    const StabilizerCode padded = pad_boundary(initial, d, inv_rate, rng);
    CHECK(padded.n_phys == n + 4 * d - inv_rate + 1);
    for (std::size_t pos : padded.logical_positions) {
      CHECK(pos >= static_cast<std::size_t>(2 * d));
      CHECK(padded.n_phys - 1 - pos >= static_cast<std::size_t>(2 * d));
    }
    ++tested;
  }
}

TEST_CASE("standard circuit structure") {
  Rng rng(3);
  const CliffordCircuit c1 = sample_circuit_standard(4, 1, rng);
  REQUIRE(c1.layers.size() == 2);
  CHECK(std::get<TwoQubitLayer>(c1.layers[0]).parity == 0);
  CHECK(std::get<SingleQubitLayer>(c1.layers[1]).gate_ids.size() == 4);

  const CliffordCircuit c2 = sample_circuit_standard(5, 2, rng);
  REQUIRE(c2.layers.size() == 4);
  CHECK(std::get<TwoQubitLayer>(c2.layers[0]).parity == 0);
  CHECK(std::get<TwoQubitLayer>(c2.layers[2]).parity == 1);
  // parity-1 layer on 5 qubits pairs (1,2),(3,4); qubit 0 idles, so a
  // single-site operator there is touched only by single-qubit gates
  CliffordCircuit second_layer_only{5, 1, {c2.layers[2]}};
  const PauliString probe = PauliString::single_site(5, 0, Pauli::X);
  CHECK(conjugate_string(second_layer_only, probe) == probe);
}

TEST_CASE("gate ids are uniform over the 24 Cliffords") {
  Rng rng(404);
  std::array<std::uint64_t, 24> counts{};
  std::uint64_t total = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const CliffordCircuit circuit = sample_circuit_standard(100, 10, rng);
    for (const CircuitLayer& layer : circuit.layers)
      if (const auto* single = std::get_if<SingleQubitLayer>(&layer))
        for (std::uint8_t id : single->gate_ids) {
          counts[id] += 1;
          ++total;
        }
  }
  REQUIRE(total == 100000);
  for (int id = 0; id < 24; ++id) {
    const double freq = counts[id] / static_cast<double>(total);
    CHECK(std::abs(freq - 1.0 / 24.0) < 0.01);
  }
}

TEST_CASE("greedy construction") {
  Rng rng(11);
  const StabilizerCode initial = build_initial_code(2, 1, rng);
  const GreedyCircuit greedy = sample_circuit_greedy(initial, 1, rng);
  // initial checks restricted to X/Y
  for (const PauliString& c : greedy.initial_code.checks) {
    const Pauli p = c.at(c.support()->first);
    CHECK(p != Pauli::Z);
    CHECK(p != Pauli::I);
  }
  // a single weight-1 check grows to weight 2 after one iSWAP layer
  const StabilizerCode encoded = encode(greedy.initial_code, greedy.circuit);
  CHECK(encoded.checks[0].weight() == 2);
  check_code_invariants(encoded);
}

TEST_CASE("greedy mean total check weight at least matches standard") {
  Rng rng(2222);
  const int d = 3;
  double greedy_total = 0.0, standard_total = 0.0;
  const int samples = 200;
  for (int rep = 0; rep < samples; ++rep) {
    const StabilizerCode initial = build_initial_code(20, 4, rng);
    const GreedyCircuit greedy = sample_circuit_greedy(initial, d, rng);
    const StabilizerCode genc = encode(greedy.initial_code, greedy.circuit);
    for (const PauliString& c : genc.checks) greedy_total += c.weight();
    const StabilizerCode senc =
        encode(initial, sample_circuit_standard(initial.n_phys, d, rng));
    for (const PauliString& c : senc.checks) standard_total += c.weight();
  }
  CHECK(greedy_total / samples >= standard_total / samples);
}

TEST_CASE("encode") {
  Rng rng(7);
  const StabilizerCode code = build_initial_code(8, 2, rng);

  const CliffordCircuit empty{8, 0, {}};
  CHECK(encode(code, empty) == code);

  const CliffordCircuit circuit = sample_circuit_standard(8, 2, rng);
  const StabilizerCode encoded = encode(code, circuit);
  check_code_invariants(encoded);
  for (const PauliString& c : encoded.checks) CHECK(c.weight() <= 4);  // 2d

  // full pairwise commutation matrix is preserved
  auto all_ops = [](const StabilizerCode& sc) {
    std::vector<PauliString> ops = sc.checks;
    ops.insert(ops.end(), sc.logical_x.begin(), sc.logical_x.end());
    ops.insert(ops.end(), sc.logical_z.begin(), sc.logical_z.end());
    return ops;
  };
  const auto before = all_ops(code);
  const auto after = all_ops(encoded);
  for (std::size_t i = 0; i < before.size(); ++i)
    for (std::size_t j = 0; j < before.size(); ++j)
      CHECK(symplectic_product(before[i], before[j]) ==
            symplectic_product(after[i], after[j]));

  CHECK_THROWS_AS(encode(code, CliffordCircuit{9, 0, {}}), std::invalid_argument);
}

TEST_CASE("full pipeline yields valid codes") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    for (CircuitVariant variant : {CircuitVariant::standard, CircuitVariant::greedy}) {
      CodeParams params;
      params.n = 15;
      params.inv_rate = 5;
      params.depth = 3;
      params.variant = variant;
      params.seed = seed;
      const StabilizerCode code = generate_code(params);
      CHECK(code.n_phys == 15 + 12 - 5 + 1);
      check_code_invariants(code);
      // light cone: every check's support fits in a 2d-site interval
      for (const PauliString& c : code.checks)
        CHECK(c.support()->length() <= 6);
    }
  }
}

TEST_CASE("code serialization round trip") {
  CodeParams params;
  params.n = 20;
  params.inv_rate = 4;
  params.depth = 2;
  params.variant = CircuitVariant::greedy;
  params.seed = 987654321;
  const StabilizerCode code = generate_code(params);
  const std::string text = serialize_code(code);
  const StabilizerCode parsed = parse_code(text);
  CHECK(parsed == code);
  CHECK(serialize_code(parsed) == text);

  // determinism: same params, same bytes
  CHECK(serialize_code(generate_code(params)) == text);

  CHECK_THROWS_AS(parse_code("garbage"), std::invalid_argument);
}
