#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ldcc/code.hpp"
#include "ldcc/noise.hpp"
#include "ldcc/rng.hpp"
#include "matrix_oracle.hpp"

using namespace ldcc;

TEST_CASE("depolarizing model") {
  const NoiseModel none = depolarizing(0.0);
  CHECK(none.p_i == 1.0);
  CHECK(none.p_x == 0.0);

  const NoiseModel mid = depolarizing(0.3);
  CHECK(mid.p_i == doctest::Approx(0.7));
  CHECK(mid.p_x == doctest::Approx(0.1));
  CHECK(mid.p_y == doctest::Approx(0.1));
  CHECK(mid.p_z == doctest::Approx(0.1));

  const NoiseModel full = depolarizing(1.0);
  CHECK(full.p_i == doctest::Approx(0.0));
  CHECK(full.p_x == doctest::Approx(1.0 / 3.0));

  CHECK_THROWS_AS(depolarizing(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(depolarizing(1.1), std::invalid_argument);
  CHECK_THROWS_AS(NoiseModel::create(0.5, 0.5, 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("sample_error statistics") {
  Rng rng(31337);
  CHECK(sample_error(depolarizing(0.0), 50, rng).is_identity());

  const std::size_t n = 100000;
  const PauliString e = sample_error(depolarizing(0.1), n, rng);
  std::size_t nx = 0, ny = 0, nz = 0;
  for (std::size_t j = 0; j < n; ++j) {
    switch (e.at(j)) {
      case Pauli::X: ++nx; break;
      case Pauli::Y: ++ny; break;
      case Pauli::Z: ++nz; break;
      default: break;
    }
  }
  const double frac = static_cast<double>(nx + ny + nz) / n;
  CHECK(std::abs(frac - 0.1) < 0.005);
  const double nonid = static_cast<double>(nx + ny + nz);
  for (std::size_t count : {nx, ny, nz})
    CHECK(std::abs(count / nonid - 1.0 / 3.0) < 0.02);
}

TEST_CASE("syndrome basics") {
  Rng rng(5);
  const StabilizerCode code =
      encode(build_initial_code(6, 2, rng), sample_circuit_standard(6, 2, rng));

  CHECK(syndrome(code, PauliString(6)).bits == std::vector<std::uint8_t>(4, 0));

  // any stabilizer element has zero syndrome
  PauliString element(6);
  element.multiply_inplace(code.checks[0]);
  element.multiply_inplace(code.checks[2]);
  CHECK(syndrome(code, element).bits == std::vector<std::uint8_t>(4, 0));

  CHECK_THROWS_AS(syndrome(code, PauliString(5)), std::invalid_argument);
}

TEST_CASE("syndrome matches matrix commutation oracle") {
  Rng rng(6);
  for (int rep = 0; rep < 10; ++rep) {
    const StabilizerCode code =
        encode(build_initial_code(4, 1, rng), sample_circuit_standard(4, 1, rng));
    PauliString e(4);
    for (std::size_t j = 0; j < 4; ++j)
      e.set(j, static_cast<Pauli>(rng.uniform_below(4)));
    const Syndrome s = syndrome(code, e);
    const auto em = matrix_oracle::pauli_string_matrix(e);
    for (std::size_t i = 0; i < code.num_checks(); ++i) {
      const auto gm = matrix_oracle::pauli_string_matrix(code.checks[i]);
      CHECK((s.bits[i] == 0) == matrix_oracle::commute(gm, em));
    }
  }
}

TEST_CASE("pure_error properties") {
  Rng rng(7);
  // all-zero syndrome gives the identity (canonical zero solution)
  const StabilizerCode code0 =
      encode(build_initial_code(6, 2, rng), sample_circuit_standard(6, 2, rng));
  CHECK(pure_error(code0, Syndrome{std::vector<std::uint8_t>(4, 0)}).is_identity());

  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 4 + rng.uniform_below(5);
    const std::size_t k = 1 + rng.uniform_below(2);
    if (k >= n) continue;
    const StabilizerCode code = encode(
        build_initial_code(n, k, rng),
        sample_circuit_standard(n, 1 + static_cast<int>(rng.uniform_below(3)), rng));
    const PauliString e = sample_error(depolarizing(0.3), n, rng);
    const Syndrome s = syndrome(code, e);
    const PauliString f = pure_error(code, s);
    CHECK(syndrome(code, f).bits == s.bits);
    // f e commutes with every check
    const PauliString residual = f * e;
    for (const PauliString& g : code.checks)
      CHECK(symplectic_product(g, residual) == 0);
  }
}

TEST_CASE("hashing rate") {
  CHECK(hashing_rate(NoiseModel{1, 0, 0, 0}) == doctest::Approx(1.0));
  CHECK(hashing_rate(NoiseModel{0.25, 0.25, 0.25, 0.25}) == doctest::Approx(-1.0));
  CHECK(std::abs(hashing_rate(depolarizing(0.13854)) - 0.2000) < 0.0005);
}

TEST_CASE("hashing threshold reproduces the known depolarizing values") {
  const struct { double rate, expected; } rows[] = {
      {0.10, 0.16305}, {0.20, 0.13854}, {0.25, 0.12690},
      {1.0 / 3.0, 0.10835}, {0.50, 0.07439},
  };
  for (const auto& row : rows)
    CHECK(std::abs(hashing_threshold(row.rate) - row.expected) < 5e-5);

  for (double rate : {0.1, 0.33, 0.5, 0.72})
    CHECK(std::abs(hashing_rate(depolarizing(hashing_threshold(rate))) - rate) < 1e-6);

  CHECK_THROWS_AS(hashing_threshold(0.0), std::invalid_argument);
  CHECK_THROWS_AS(hashing_threshold(1.0), std::invalid_argument);
}

TEST_CASE("syndrome is linear") {
  Rng rng(8);
  const StabilizerCode code =
      encode(build_initial_code(8, 2, rng), sample_circuit_standard(8, 2, rng));
  for (int rep = 0; rep < 20; ++rep) {
    const PauliString e1 = sample_error(depolarizing(0.4), 8, rng);
    const PauliString e2 = sample_error(depolarizing(0.4), 8, rng);
    const Syndrome s1 = syndrome(code, e1);
    const Syndrome s2 = syndrome(code, e2);
    const Syndrome s12 = syndrome(code, e1 * e2);
    for (std::size_t i = 0; i < s12.bits.size(); ++i)
      CHECK(s12.bits[i] == (s1.bits[i] ^ s2.bits[i]));
  }
}
