#include "ldcc/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "ldcc/gf2.hpp"

namespace ldcc {

NoiseModel NoiseModel::create(double pi, double px, double py, double pz) {
  for (double p : {pi, px, py, pz})
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("NoiseModel: probabilities must be in [0,1]");
  if (std::abs(pi + px + py + pz - 1.0) > 1e-12)
    throw std::invalid_argument("NoiseModel: probabilities must sum to 1");
  return NoiseModel{pi, px, py, pz};
}

NoiseModel depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("depolarizing: p must be in [0,1]");
  return NoiseModel{1.0 - p, p / 3.0, p / 3.0, p / 3.0};
}

PauliString sample_error(const NoiseModel& noise, std::size_t n, Rng& rng) {
  PauliString e(n);
  const double tx = noise.p_x;
  const double ty = tx + noise.p_y;
  const double tz = ty + noise.p_z;
  for (std::size_t j = 0; j < n; ++j) {
    const double u = rng.uniform_double();
    if (u < tx) e.set(j, Pauli::X);
    else if (u < ty) e.set(j, Pauli::Y);
    else if (u < tz) e.set(j, Pauli::Z);
  }
  return e;
}

Syndrome syndrome(const StabilizerCode& code, const PauliString& e) {
  if (e.num_qubits() != code.n_phys)
    throw std::invalid_argument("syndrome: error length mismatch");
  Syndrome s;
  s.bits.reserve(code.num_checks());
  for (const PauliString& g : code.checks)
    s.bits.push_back(static_cast<std::uint8_t>(symplectic_product(g, e)));
  return s;
}

PauliString pure_error(const StabilizerCode& code, const Syndrome& s) {
  const std::size_t m = code.num_checks();
  if (s.bits.size() != m)
    throw std::invalid_argument("pure_error: syndrome length mismatch");
  const std::size_t n = code.n_phys;
  // <g, f> = sum_j g.x_j f.z_j + g.z_j f.x_j: the row for check g over
  // unknowns [f.x | f.z] is [g.z | g.x].
  gf2::BitMatrix mat(m, 2 * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t q = 0; q < n; ++q) {
      mat.set(i, q, code.checks[i].z_bit(q));
      mat.set(i, n + q, code.checks[i].x_bit(q));
    }
  const auto solution = gf2::solve(mat, s.bits);
  if (!solution)
    throw std::invalid_argument("pure_error: inconsistent syndrome system");
  PauliString f(n);
  for (std::size_t q = 0; q < n; ++q)
    f.set(q, pauli_from_bits((*solution)[q] != 0, (*solution)[n + q] != 0));
  return f;
}

namespace {

double entropy2(std::initializer_list<double> ps) {
  double h = 0.0;
  for (double p : ps)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace

double hashing_rate(const NoiseModel& noise) {
  return 1.0 - entropy2({noise.p_i, noise.p_x, noise.p_y, noise.p_z});
}

double hashing_threshold(double rate) {
  if (!(rate > 0.0 && rate < 1.0))
    throw std::invalid_argument("hashing_threshold: rate must be in (0,1)");
  double lo = 0.0, hi = 0.75;
  // hashing_rate(depolarizing(p)) decreases from 1 at p=0 to -1 at p=3/4.
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    if (hashing_rate(depolarizing(mid)) > rate) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ldcc
