#include "ldcc/code.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ldcc/gf2.hpp"

namespace ldcc {

std::string variant_name(CircuitVariant v) {
  return v == CircuitVariant::standard ? "standard" : "greedy";
}

CircuitVariant variant_from_name(std::string_view name) {
  if (name == "standard") return CircuitVariant::standard;
  if (name == "greedy") return CircuitVariant::greedy;
  throw std::invalid_argument("unknown circuit variant: " + std::string(name));
}

void CodeParams::validate() const {
  if (inv_rate < 2) throw std::invalid_argument("inv_rate must be >= 2");
  if (n == 0 || n % inv_rate != 0)
    throw std::invalid_argument("n must be a positive multiple of inv_rate");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
}

StabilizerCode build_initial_code(std::size_t n, std::size_t k, Rng& rng) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("build_initial_code: need 1 <= k < n");
  StabilizerCode code;
  code.n_phys = n;
  code.n = n;
  code.k = k;
  code.logical_positions.reserve(k);
  for (std::size_t j = 0; j < k; ++j)
    code.logical_positions.push_back((2 * j + 1) * n / (2 * k));

  std::vector<bool> is_logical(n, false);
  for (std::size_t pos : code.logical_positions) is_logical[pos] = true;

  constexpr Pauli choices[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (std::size_t site = 0; site < n; ++site) {
    if (is_logical[site]) {
      code.logical_x.push_back(PauliString::single_site(n, site, Pauli::X));
      code.logical_z.push_back(PauliString::single_site(n, site, Pauli::Z));
    } else {
      code.checks.push_back(
          PauliString::single_site(n, site, choices[rng.uniform_below(3)]));
    }
  }
  return code;
}

StabilizerCode pad_boundary(const StabilizerCode& code, int depth,
                            std::size_t inv_rate, Rng& rng) {
  if (inv_rate < 1) throw std::invalid_argument("pad_boundary: 1/r must be >= 1");
  if (depth < 1) throw std::invalid_argument("pad_boundary: depth must be >= 1");
  const long extra = 4l * depth - static_cast<long>(inv_rate) + 1;
  if (static_cast<long>(code.n_phys) + extra <= 0)
    throw std::invalid_argument("pad_boundary: n_phys formula non-positive");
  if (extra < 0)
    throw std::invalid_argument(
        "pad_boundary: 4d - 1/r + 1 is negative; cannot remove qubits");

  // Split as evenly as possible (left end gets the odd qubit), then shift
  // qubits across until every logical position is >= 2d from both ends.
  long left = (extra + 1) / 2;
  long right = extra - left;
  const long margin = 2l * depth;
  const long first_pos = static_cast<long>(code.logical_positions.front());
  const long last_gap =
      static_cast<long>(code.n_phys) - 1 - static_cast<long>(code.logical_positions.back());
  while (first_pos + left < margin && right > 0) { ++left; --right; }
  while (last_gap + right < margin && left > 0) { --left; ++right; }
  if (first_pos + left < margin || last_gap + right < margin)
    throw std::invalid_argument("pad_boundary: cannot reach 2d boundary margin");

  const std::size_t n_new = code.n_phys + static_cast<std::size_t>(extra);
  const std::size_t shift = static_cast<std::size_t>(left);

  auto embed = [&](const PauliString& p) {
    PauliString q(n_new);
    for (std::size_t j = 0; j < p.num_qubits(); ++j) q.set(j + shift, p.at(j));
    return q;
  };

  StabilizerCode out;
  out.n_phys = n_new;
  out.n = code.n;
  out.k = code.k;
  out.depth = code.depth;
  out.variant = code.variant;
  out.seed = code.seed;
  constexpr Pauli choices[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (std::size_t site = 0; site < shift; ++site)
    out.checks.push_back(
        PauliString::single_site(n_new, site, choices[rng.uniform_below(3)]));
  for (const PauliString& c : code.checks) out.checks.push_back(embed(c));
  for (std::size_t site = shift + code.n_phys; site < n_new; ++site)
    out.checks.push_back(
        PauliString::single_site(n_new, site, choices[rng.uniform_below(3)]));
  for (const PauliString& l : code.logical_x) out.logical_x.push_back(embed(l));
  for (const PauliString& l : code.logical_z) out.logical_z.push_back(embed(l));
  for (std::size_t pos : code.logical_positions)
    out.logical_positions.push_back(pos + shift);
  return out;
}

CliffordCircuit sample_circuit_standard(std::size_t n_phys, int depth, Rng& rng) {
  if (depth < 1) throw std::invalid_argument("sample_circuit_standard: depth >= 1");
  CliffordCircuit circuit;
  circuit.n = n_phys;
  circuit.depth = depth;
  for (int layer = 0; layer < depth; ++layer) {
    circuit.layers.emplace_back(TwoQubitLayer{layer % 2});
    SingleQubitLayer gates;
    gates.gate_ids.reserve(n_phys);
    for (std::size_t q = 0; q < n_phys; ++q)
      gates.gate_ids.push_back(static_cast<std::uint8_t>(rng.uniform_below(24)));
    circuit.layers.emplace_back(std::move(gates));
  }
  return circuit;
}

namespace {

int pair_weight(Pauli a, Pauli b) {
  return (a != Pauli::I ? 1 : 0) + (b != Pauli::I ? 1 : 0);
}

}  // namespace

GreedyCircuit sample_circuit_greedy(const StabilizerCode& initial, int depth,
                                    Rng& rng) {
  if (depth < 1) throw std::invalid_argument("sample_circuit_greedy: depth >= 1");
  for (const PauliString& c : initial.checks)
    if (c.weight() != 1)
      throw std::invalid_argument(
          "sample_circuit_greedy: expects an initial (single-site-check) code");

  GreedyCircuit result;
  result.initial_code = initial;
  // Initial checks restricted to {X, Y}: iSWAP then grows every check to
  // weight two, whereas a single-site Z would stay weight one.
  for (PauliString& c : result.initial_code.checks) {
    const std::size_t site = c.support()->first;
    c.set(site, rng.uniform_below(2) == 0 ? Pauli::X : Pauli::Y);
  }

  const std::size_t n = initial.n_phys;
  std::vector<PauliString> ops;
  ops.reserve(result.initial_code.checks.size() + 2 * initial.k);
  for (const PauliString& c : result.initial_code.checks) ops.push_back(c);
  for (const PauliString& l : result.initial_code.logical_x) ops.push_back(l);
  for (const PauliString& l : result.initial_code.logical_z) ops.push_back(l);

  const auto& group = single_clifford_group();
  CliffordCircuit circuit;
  circuit.n = n;
  circuit.depth = depth;

  for (int layer = 0; layer < depth; ++layer) {
    const int parity = layer % 2;
    SingleQubitLayer gates;
    gates.gate_ids.assign(n, 0);
    std::vector<bool> in_pair(n, false);

    for (std::size_t a = static_cast<std::size_t>(parity); a + 1 < n; a += 2) {
      in_pair[a] = in_pair[a + 1] = true;
      // Site Paulis of every tracked operator touching this gate pair.
      std::vector<std::pair<Pauli, Pauli>> touched;
      for (const PauliString& op : ops) {
        const Pauli pa = op.at(a), pb = op.at(a + 1);
        if (pa != Pauli::I || pb != Pauli::I) touched.emplace_back(pa, pb);
      }
      int best = -1;
      std::vector<std::pair<std::uint8_t, std::uint8_t>> argmax;
      for (std::uint8_t ga = 0; ga < 24; ++ga) {
        for (std::uint8_t gb = 0; gb < 24; ++gb) {
          int score = 0;
          for (const auto& [pa, pb] : touched) {
            const Pauli qa = apply_clifford(group[ga], pa).pauli;
            const Pauli qb = apply_clifford(group[gb], pb).pauli;
            const PauliPairSign out = conjugate_by_iswap(qa, qb);
            score += pair_weight(out.a, out.b);
          }
          if (score > best) {
            best = score;
            argmax.clear();
          }
          if (score == best) argmax.emplace_back(ga, gb);
        }
      }
      const auto& [ga, gb] = argmax[rng.uniform_below(
          static_cast<std::uint32_t>(argmax.size()))];
      gates.gate_ids[a] = ga;
      gates.gate_ids[a + 1] = gb;
    }
    // Idle edge qubits cannot change any weight; all 24 gates tie.
    for (std::size_t q = 0; q < n; ++q)
      if (!in_pair[q])
        gates.gate_ids[q] = static_cast<std::uint8_t>(rng.uniform_below(24));

    for (PauliString& op : ops) {
      for (std::size_t q = 0; q < n; ++q) {
        const Pauli p = op.at(q);
        if (p != Pauli::I) op.set(q, apply_clifford(group[gates.gate_ids[q]], p).pauli);
      }
      for (std::size_t a = static_cast<std::size_t>(parity); a + 1 < n; a += 2) {
        const PauliPairSign out = conjugate_by_iswap(op.at(a), op.at(a + 1));
        op.set(a, out.a);
        op.set(a + 1, out.b);
      }
    }
    circuit.layers.emplace_back(std::move(gates));
    circuit.layers.emplace_back(TwoQubitLayer{parity});
  }
  result.circuit = std::move(circuit);
  return result;
}

StabilizerCode encode(const StabilizerCode& code, const CliffordCircuit& circuit) {
  if (circuit.n != code.n_phys)
    throw std::invalid_argument("encode: circuit/code qubit count mismatch");
  StabilizerCode out = code;
  for (PauliString& c : out.checks) c = conjugate_string(circuit, c);
  for (PauliString& l : out.logical_x) l = conjugate_string(circuit, l);
  for (PauliString& l : out.logical_z) l = conjugate_string(circuit, l);
  return out;
}

StabilizerCode generate_code(const CodeParams& params, Rng& rng) {
  params.validate();
  StabilizerCode initial = build_initial_code(params.n, params.k(), rng);
  StabilizerCode padded = pad_boundary(initial, params.depth, params.inv_rate, rng);
  StabilizerCode encoded;
  if (params.variant == CircuitVariant::greedy) {
    GreedyCircuit greedy = sample_circuit_greedy(padded, params.depth, rng);
    encoded = encode(greedy.initial_code, greedy.circuit);
  } else {
    CliffordCircuit circuit =
        sample_circuit_standard(padded.n_phys, params.depth, rng);
    encoded = encode(padded, circuit);
  }
  encoded.n = params.n;
  encoded.depth = params.depth;
  encoded.variant = params.variant;
  encoded.seed = params.seed;
  return encoded;
}

StabilizerCode generate_code(const CodeParams& params) {
  Rng rng = Rng::child(params.seed, stream::kCodeGen, 0);
  return generate_code(params, rng);
}

void check_code_invariants(const StabilizerCode& code) {
  const std::size_t m = code.num_checks();
  if (m + code.k != code.n_phys)
    throw std::logic_error("code invariant: check count != n_phys - k");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (symplectic_product(code.checks[i], code.checks[j]) != 0)
        throw std::logic_error("code invariant: checks do not commute");
  for (std::size_t j = 0; j < code.k; ++j) {
    if (symplectic_product(code.logical_x[j], code.logical_z[j]) != 1)
      throw std::logic_error("code invariant: logical pair must anticommute");
    for (std::size_t i = 0; i < m; ++i) {
      if (symplectic_product(code.checks[i], code.logical_x[j]) != 0 ||
          symplectic_product(code.checks[i], code.logical_z[j]) != 0)
        throw std::logic_error("code invariant: logical/check must commute");
    }
    for (std::size_t i = 0; i < code.k; ++i) {
      if (i == j) continue;
      if (symplectic_product(code.logical_x[j], code.logical_x[i]) != 0 ||
          symplectic_product(code.logical_x[j], code.logical_z[i]) != 0 ||
          symplectic_product(code.logical_z[j], code.logical_z[i]) != 0)
        throw std::logic_error("code invariant: distinct logical pairs must commute");
    }
  }
  gf2::BitMatrix mat(m, 2 * code.n_phys);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t q = 0; q < code.n_phys; ++q) {
      mat.set(i, q, code.checks[i].x_bit(q));
      mat.set(i, code.n_phys + q, code.checks[i].z_bit(q));
    }
  if (gf2::rank(std::move(mat)) != m)
    throw std::logic_error("code invariant: checks linearly dependent over GF(2)");
}

std::string serialize_code(const StabilizerCode& code) {
  if (code.n == 0 || code.k == 0)
    throw std::invalid_argument("serialize_code: missing n/k metadata");
  const std::size_t g = std::gcd(code.k, code.n);
  std::ostringstream out;
  out << code.n_phys << ' ' << code.k << ' ' << code.depth << ' '
      << (code.k / g) << '/' << (code.n / g) << ' '
      << variant_name(code.variant) << ' ' << code.seed << '\n';
  out << "P:";
  for (std::size_t pos : code.logical_positions) out << ' ' << pos;
  out << '\n';
  for (const PauliString& c : code.checks) out << "C: " << c.text() << '\n';
  for (std::size_t j = 0; j < code.k; ++j) {
    out << "LX: " << code.logical_x[j].text() << '\n';
    out << "LZ: " << code.logical_z[j].text() << '\n';
  }
  return out.str();
}

StabilizerCode parse_code(std::string_view text) {
  std::istringstream in{std::string(text)};
  StabilizerCode code;
  std::string rate_text, variant_text;
  if (!(in >> code.n_phys >> code.k >> code.depth >> rate_text >> variant_text >>
        code.seed))
    throw std::invalid_argument("parse_code: malformed header");
  const std::size_t slash = rate_text.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("parse_code: rate must be a fraction");
  const std::size_t num = std::stoull(rate_text.substr(0, slash));
  const std::size_t den = std::stoull(rate_text.substr(slash + 1));
  if (num == 0 || den == 0 || code.k % num != 0)
    throw std::invalid_argument("parse_code: bad rate fraction");
  code.n = code.k / num * den;
  code.variant = variant_from_name(variant_text);

  std::string tag;
  if (!(in >> tag) || tag != "P:")
    throw std::invalid_argument("parse_code: expected P: line");
  code.logical_positions.resize(code.k);
  for (std::size_t j = 0; j < code.k; ++j)
    if (!(in >> code.logical_positions[j]))
      throw std::invalid_argument("parse_code: bad logical positions");

  auto read_string = [&](const char* want) {
    std::string prefix, body;
    if (!(in >> prefix >> body) || prefix != want)
      throw std::invalid_argument(std::string("parse_code: expected ") + want);
    PauliString p = PauliString::from_text(body);
    if (p.num_qubits() != code.n_phys)
      throw std::invalid_argument("parse_code: operator length mismatch");
    return p;
  };
  const std::size_t m = code.n_phys - code.k;
  for (std::size_t i = 0; i < m; ++i) code.checks.push_back(read_string("C:"));
  for (std::size_t j = 0; j < code.k; ++j) {
    code.logical_x.push_back(read_string("LX:"));
    code.logical_z.push_back(read_string("LZ:"));
  }
  return code;
}

}  // namespace ldcc
