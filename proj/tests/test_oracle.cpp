#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ldcc/oracle.hpp"
#include "ldcc/rng.hpp"
#include "test_helpers.hpp"

using namespace ldcc;

namespace {

StabilizerCode check_only_code(std::size_t n, const std::vector<PauliString>& checks) {
  StabilizerCode code;
  code.n_phys = n;
  code.k = n - checks.size();
  code.checks = checks;
  return code;
}

}  // namespace

TEST_CASE("single-check code sums two terms") {
  const StabilizerCode code =
      check_only_code(1, {PauliString::from_text("Z")});
  const NoiseModel noise = depolarizing(0.3);
  CHECK(brute_coset_probability(code, PauliString(1), noise) ==
        doctest::Approx(0.7 + 0.1).epsilon(1e-12));
  CHECK(brute_coset_probability(code, PauliString::from_text("X"), noise) ==
        doctest::Approx(0.1 + 0.1).epsilon(1e-12));
}

TEST_CASE("trivial all-Z-check code factorizes over sites") {
  std::vector<PauliString> checks;
  const std::size_t n = 6;
  for (std::size_t j = 0; j < n; ++j)
    checks.push_back(PauliString::single_site(n, j, Pauli::Z));
  const StabilizerCode code = check_only_code(n, checks);
  const NoiseModel noise = depolarizing(0.12);
  const double expected = std::pow(noise.p_i + noise.p_z, n);
  CHECK(brute_coset_probability(code, PauliString(n), noise) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("gray-code and direct enumerations agree") {
  Rng rng(314);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 4 + rng.uniform_below(4);
    const std::size_t k = 1 + rng.uniform_below(2);
    const StabilizerCode code = test_helpers::random_encoded_code(
        n, k, 1 + static_cast<int>(rng.uniform_below(3)), rng);
    const NoiseModel noise = depolarizing(0.05 + 0.2 * rng.uniform_double());
    const PauliString f =
        test_helpers::random_class_representative(code, noise, rng);
    const double direct = brute_coset_probability(code, f, noise);
    const double gray = brute_coset_probability_gray(code, f, noise);
    CHECK(std::abs(direct - gray) <= 1e-14 * std::max(direct, gray));
  }
}

TEST_CASE("oracle is invariant under generator reordering") {
  Rng rng(llround(1e6));
  const StabilizerCode code = test_helpers::random_encoded_code(7, 1, 2, rng);
  const NoiseModel noise = depolarizing(0.17);
  const PauliString f = test_helpers::random_class_representative(code, noise, rng);
  const double base = brute_coset_probability(code, f, noise);
  StabilizerCode shuffled = code;
  std::reverse(shuffled.checks.begin(), shuffled.checks.end());
  std::swap(shuffled.checks[0], shuffled.checks[2]);
  const double permuted = brute_coset_probability(shuffled, f, noise);
  CHECK(std::abs(base - permuted) <= 1e-13 * base);
}

TEST_CASE("caps are hard errors") {
  Rng rng(9);
  const StabilizerCode code = test_helpers::random_encoded_code(8, 2, 1, rng);
  const NoiseModel noise = depolarizing(0.1);
  CHECK_THROWS_AS(brute_coset_probability(code, PauliString(8), noise, 4),
                  ResourceError);
  CHECK_THROWS_AS(brute_ml_decode(code, syndrome(code, PauliString(8)), noise,
                                  /*max_k=*/1),
                  ResourceError);
}

TEST_CASE("brute ML decode on a tiny code") {
  Rng rng(10);
  const StabilizerCode code = test_helpers::random_encoded_code(5, 1, 2, rng);
  const NoiseModel noise = depolarizing(0.01);
  const Syndrome zero{std::vector<std::uint8_t>(code.num_checks(), 0)};
  const BruteDecodeResult result = brute_ml_decode(code, zero, noise);
  REQUIRE(result.global_class.size() == 1);
  CHECK(result.global_class[0] == Pauli::I);
  CHECK(result.table.size() == 4);
  CHECK(result.total == doctest::Approx(result.table[0] + result.table[1] +
                                        result.table[2] + result.table[3]));
}

TEST_CASE("class table sums to the total syndrome probability") {
  Rng rng(11);
  for (int rep = 0; rep < 6; ++rep) {
    const std::size_t n = 5 + rng.uniform_below(3);  // 4^n enumeration below
    const std::size_t k = 1 + rng.uniform_below(2);
    const StabilizerCode code = test_helpers::random_encoded_code(n, k, 2, rng);
    const NoiseModel noise = depolarizing(0.1 + 0.2 * rng.uniform_double());
    const PauliString e = sample_error(noise, n, rng);
    const Syndrome s = syndrome(code, e);
    const BruteDecodeResult result = brute_ml_decode(code, s, noise);

    // independent route: enumerate every n-qubit Pauli error
    double total = 0.0;
    for (std::uint64_t word = 0; word < (std::uint64_t(1) << (2 * n)); ++word) {
      PauliString candidate(n);
      for (std::size_t j = 0; j < n; ++j)
        candidate.set(j, static_cast<Pauli>((word >> (2 * j)) & 3u));
      if (syndrome(code, candidate).bits != s.bits) continue;
      double p = 1.0;
      for (std::size_t j = 0; j < n; ++j) p *= noise.prob(candidate.at(j));
      total += p;
    }
    CHECK(std::abs(result.total - total) <= 1e-12 * total);
  }
}
