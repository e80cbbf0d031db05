#include "ldcc/tn_decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ldcc {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double check_tensor_entry(Pauli p, int i_x, int i_z, int j_x, int j_z,
                          int sigma_u, int sigma_d) {
  if (p == Pauli::I)
    throw std::invalid_argument("check_tensor_entry: tensor kind must be X, Y or Z");
  if (sigma_u != sigma_d) return 0.0;
  const int dx = sigma_u ? (pauli_x_bit(p) ? 1 : 0) : 0;
  const int dz = sigma_u ? (pauli_z_bit(p) ? 1 : 0) : 0;
  return (i_x == (j_x ^ dx) && i_z == (j_z ^ dz)) ? 1.0 : 0.0;
}

std::array<double, 4> probability_tensor(const NoiseModel& noise, Pauli f_l_site) {
  const std::array<double, 4> base = noise.probs_by_bits();
  const int flip = static_cast<int>(f_l_site);
  std::array<double, 4> out{};
  for (int h = 0; h < 4; ++h) out[h] = base[h ^ flip];
  return out;
}

TnLayout build_layout(const std::vector<PauliString>& generators,
                      std::size_t n_phys) {
  TnLayout layout;
  layout.n_rows = n_phys;
  layout.rows.resize(n_phys);
  layout.generators.resize(generators.size());

  std::vector<PauliString::Interval> supports(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].num_qubits() != n_phys)
      throw std::invalid_argument("build_layout: generator length mismatch");
    const auto support = generators[g].support();
    if (!support)
      throw std::invalid_argument("build_layout: identity generator");
    supports[g] = *support;
  }

  // First-fit interval packing in order of first support row. For interval
  // graphs this uses exactly max-overlap many columns.
  std::vector<std::size_t> order(generators.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (supports[a].first != supports[b].first)
      return supports[a].first < supports[b].first;
    if (supports[a].last != supports[b].last)
      return supports[a].last < supports[b].last;
    return a < b;
  });

  std::vector<std::size_t> column_free_from;  // first row not yet occupied
  for (std::size_t g : order) {
    std::size_t col = column_free_from.size();
    for (std::size_t c = 0; c < column_free_from.size(); ++c) {
      if (column_free_from[c] <= supports[g].first) {
        col = c;
        break;
      }
    }
    if (col == column_free_from.size()) column_free_from.push_back(0);
    column_free_from[col] = supports[g].last + 1;
    layout.generators[g] = GeneratorPlacement{
        static_cast<std::uint32_t>(col),
        static_cast<std::uint32_t>(supports[g].first),
        static_cast<std::uint32_t>(supports[g].last)};
    for (std::size_t r = supports[g].first; r <= supports[g].last; ++r) {
      const Pauli p = generators[g].at(r);
      if (p != Pauli::I)
        layout.rows[r].push_back(LayoutCell{static_cast<std::uint32_t>(col),
                                            static_cast<std::uint32_t>(g), p});
    }
  }
  layout.n_columns = column_free_from.size();
  for (auto& row : layout.rows)
    std::sort(row.begin(), row.end(),
              [](const LayoutCell& a, const LayoutCell& b) {
                return a.column < b.column;
              });
  return layout;
}

namespace {

/// Row-sweep boundary state over the active sigma wires. Slot order follows
/// spawn order (cells scanned by column within each row); retiring a slot
/// compacts the higher slots down, so the arithmetic sequence is a pure
/// function of the layout and is replayed exactly when resuming a snapshot.
class GridSweep {
 public:
  GridSweep(const TnLayout& layout, int width_cap)
      : layout_(&layout), width_cap_(width_cap),
        slot_of_(layout.generators.size(), -1), state_(1, 1.0) {}

  struct Snapshot {
    std::vector<double> state;
    std::vector<std::uint32_t> slot_gen;
    double pending = 1.0;
    double log_scale = 0.0;
    bool dead = false;
  };

  Snapshot save() const {
    return Snapshot{state_, slot_gen_, pending_, log_scale_, dead_};
  }
  void restore(const Snapshot& snap) {
    state_ = snap.state;
    slot_gen_ = snap.slot_gen;
    pending_ = snap.pending;
    log_scale_ = snap.log_scale;
    dead_ = snap.dead;
    std::fill(slot_of_.begin(), slot_of_.end(), -1);
    for (std::size_t b = 0; b < slot_gen_.size(); ++b) slot_of_[slot_gen_[b]] = static_cast<int>(b);
  }

  void absorb_row(std::size_t r, const std::array<double, 4>& probs) {
    if (dead_) return;
    const auto& cells = layout_->rows[r];
    for (const LayoutCell& cell : cells)
      if (layout_->generators[cell.generator].first_row == r)
        spawn(cell.generator);
    std::uint64_t mask_x = 0, mask_z = 0;
    for (const LayoutCell& cell : cells) {
      const std::uint64_t bit = std::uint64_t(1) << slot_of_[cell.generator];
      if (pauli_x_bit(cell.pauli)) mask_x |= bit;
      if (pauli_z_bit(cell.pauli)) mask_z |= bit;
    }
    const double inv = 1.0 / pending_;
    const std::array<double, 4> factor = {probs[0] * inv, probs[1] * inv,
                                          probs[2] * inv, probs[3] * inv};
    double mx = 0.0;
    for (std::size_t s = 0; s < state_.size(); ++s) {
      const int idx = static_cast<int>(std::popcount(s & mask_x) & 1u) |
                      (static_cast<int>(std::popcount(s & mask_z) & 1u) << 1);
      const double v = state_[s] * factor[idx];
      state_[s] = v;
      if (v > mx) mx = v;
    }
    log_scale_ += std::log(pending_);
    if (mx == 0.0) {
      dead_ = true;
      return;
    }
    pending_ = mx;
    for (const LayoutCell& cell : cells)
      if (layout_->generators[cell.generator].last_row == r)
        retire(cell.generator);
  }

  bool dead() const { return dead_; }

  double result() const {
    if (dead_) return kNegInf;
    return std::log(state_[0]) + log_scale_;
  }

 private:
  void spawn(std::uint32_t gen) {
    if (static_cast<int>(slot_gen_.size()) + 1 > width_cap_)
      throw ResourceError("grid contraction width exceeds cap of " +
                          std::to_string(width_cap_) + " sigma wires");
    const std::size_t size = state_.size();
    state_.resize(2 * size);
    std::copy(state_.begin(), state_.begin() + size, state_.begin() + size);
    slot_of_[gen] = static_cast<int>(slot_gen_.size());
    slot_gen_.push_back(gen);
  }

  void retire(std::uint32_t gen) {
    const int b = slot_of_[gen];
    const std::uint64_t low_mask = (std::uint64_t(1) << b) - 1;
    const std::size_t half = state_.size() / 2;
    for (std::size_t t = 0; t < half; ++t) {
      const std::size_t s0 = ((t >> b) << (b + 1)) | (t & low_mask);
      state_[t] = state_[s0] + state_[s0 | (std::uint64_t(1) << b)];
    }
    state_.resize(half);
    slot_gen_.erase(slot_gen_.begin() + b);
    slot_of_[gen] = -1;
    for (std::size_t i = static_cast<std::size_t>(b); i < slot_gen_.size(); ++i)
      slot_of_[slot_gen_[i]] = static_cast<int>(i);
  }

  const TnLayout* layout_;
  int width_cap_;
  std::vector<int> slot_of_;
  std::vector<double> state_;
  std::vector<std::uint32_t> slot_gen_;
  double pending_ = 1.0;
  double log_scale_ = 0.0;
  bool dead_ = false;
};

}  // namespace

double contract(const TnLayout& layout, const PauliString& f_l,
                const std::vector<std::array<double, 4>>& site_probs,
                const ContractOptions& opts) {
  if (f_l.num_qubits() != layout.n_rows)
    throw std::invalid_argument("contract: f_L length mismatch");
  if (site_probs.size() != layout.n_rows)
    throw std::invalid_argument("contract: site_probs length mismatch");
  GridSweep sweep(layout, opts.width_cap_bits);
  for (std::size_t r = 0; r < layout.n_rows; ++r) {
    const std::array<double, 4>& base = site_probs[r];
    const int flip = static_cast<int>(f_l.at(r));
    const std::array<double, 4> probs = {base[0 ^ flip], base[1 ^ flip],
                                         base[2 ^ flip], base[3 ^ flip]};
    sweep.absorb_row(r, probs);
    if (sweep.dead()) return kNegInf;
  }
  return sweep.result();
}

double contract(const TnLayout& layout, const PauliString& f_l,
                const NoiseModel& noise, const ContractOptions& opts) {
  const std::vector<std::array<double, 4>> site_probs(layout.n_rows,
                                                      noise.probs_by_bits());
  return contract(layout, f_l, site_probs, opts);
}

double contract_fixed_sigma(const TnLayout& layout, const PauliString& f_l,
                            const NoiseModel& noise,
                            const std::vector<std::uint8_t>& sigma) {
  if (sigma.size() != layout.generators.size())
    throw std::invalid_argument("contract_fixed_sigma: sigma length mismatch");
  if (f_l.num_qubits() != layout.n_rows)
    throw std::invalid_argument("contract_fixed_sigma: f_L length mismatch");
  const std::array<double, 4> base = noise.probs_by_bits();
  double value = 1.0;
  for (std::size_t r = 0; r < layout.n_rows; ++r) {
    int h = static_cast<int>(f_l.at(r));
    for (const LayoutCell& cell : layout.rows[r])
      if (sigma[cell.generator])
        h ^= static_cast<int>(cell.pauli);
    value *= base[h];
  }
  return value;
}

double coset_probability(const StabilizerCode& code, const PauliString& f_l,
                         const NoiseModel& noise,
                         const std::vector<PauliString>& extra_generators,
                         const ContractOptions& opts) {
  if (f_l.num_qubits() != code.n_phys)
    throw std::invalid_argument("coset_probability: f_L length mismatch");
  std::vector<PauliString> generators;
  generators.reserve(code.checks.size() + extra_generators.size());
  generators.insert(generators.end(), code.checks.begin(), code.checks.end());
  generators.insert(generators.end(), extra_generators.begin(),
                    extra_generators.end());
  const TnLayout layout = build_layout(generators, code.n_phys);
  return contract(layout, f_l, noise, opts);
}

double contract_tanner_chain(const StabilizerCode& code, const PauliString& f_l,
                             const NoiseModel& noise,
                             const std::vector<PauliString>& extra_generators,
                             const ContractOptions& opts) {
  if (f_l.num_qubits() != code.n_phys)
    throw std::invalid_argument("contract_tanner_chain: f_L length mismatch");
  const std::size_t n = code.n_phys;
  std::vector<const PauliString*> gens;
  gens.reserve(code.checks.size() + extra_generators.size());
  for (const PauliString& g : code.checks) gens.push_back(&g);
  for (const PauliString& g : extra_generators) gens.push_back(&g);

  // Static bond-slot assignment: first-fit over support intervals in
  // generator-index order. The state keeps the full 2^W bond dimension for
  // the whole sweep; inactive slots carry zeros.
  std::vector<PauliString::Interval> supports(gens.size());
  std::vector<int> slot(gens.size(), -1);
  std::vector<std::size_t> slot_free_from;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g]->num_qubits() != n)
      throw std::invalid_argument("contract_tanner_chain: generator length mismatch");
    const auto support = gens[g]->support();
    if (!support)
      throw std::invalid_argument("contract_tanner_chain: identity generator");
    supports[g] = *support;
    std::size_t chosen = slot_free_from.size();
    for (std::size_t c = 0; c < slot_free_from.size(); ++c)
      if (slot_free_from[c] <= supports[g].first) {
        chosen = c;
        break;
      }
    if (chosen == slot_free_from.size()) slot_free_from.push_back(0);
    slot_free_from[chosen] = supports[g].last + 1;
    slot[g] = static_cast<int>(chosen);
  }
  const int width = static_cast<int>(slot_free_from.size());
  if (width > opts.width_cap_bits)
    throw ResourceError("tanner chain bond width " + std::to_string(width) +
                        " exceeds cap of " + std::to_string(opts.width_cap_bits));

  struct SiteProgram {
    std::vector<std::uint64_t> spawn_bits;
    std::vector<std::uint64_t> retire_bits;
    std::uint64_t mask_x = 0, mask_z = 0;
  };
  std::vector<SiteProgram> program(n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::uint64_t bit = std::uint64_t(1) << slot[g];
    program[supports[g].first].spawn_bits.push_back(bit);
    program[supports[g].last].retire_bits.push_back(bit);
    for (std::size_t q = supports[g].first; q <= supports[g].last; ++q) {
      const Pauli p = gens[g]->at(q);
      if (pauli_x_bit(p)) program[q].mask_x |= bit;
      if (pauli_z_bit(p)) program[q].mask_z |= bit;
    }
  }

  std::vector<double> state(std::size_t(1) << width, 0.0);
  state[0] = 1.0;
  double log_scale = 0.0;
  const std::size_t size = state.size();
  for (std::size_t q = 0; q < n; ++q) {
    const SiteProgram& sp = program[q];
    for (std::uint64_t bit : sp.spawn_bits)
      for (std::size_t s = 0; s < size; ++s)
        if (!(s & bit)) state[s | bit] = state[s];
    const std::array<double, 4> probs = probability_tensor(noise, f_l.at(q));
    double mx = 0.0;
    for (std::size_t s = 0; s < size; ++s) {
      const int idx = static_cast<int>(std::popcount(s & sp.mask_x) & 1u) |
                      (static_cast<int>(std::popcount(s & sp.mask_z) & 1u) << 1);
      const double v = state[s] * probs[idx];
      state[s] = v;
      if (v > mx) mx = v;
    }
    if (mx == 0.0) return kNegInf;
    for (std::uint64_t bit : sp.retire_bits)
      for (std::size_t s = 0; s < size; ++s)
        if (!(s & bit)) {
          state[s] += state[s | bit];
          state[s | bit] = 0.0;
        }
    const double inv = 1.0 / mx;
    for (std::size_t s = 0; s < size; ++s) state[s] *= inv;
    log_scale += std::log(mx);
  }
  return std::log(state[0]) + log_scale;
}

namespace {

PauliString class_string(const PauliString& f, const StabilizerCode& code,
                         std::size_t j, int cls) {
  PauliString out = f;
  if (cls == 1 || cls == 3) out.multiply_inplace(code.logical_x[j]);
  if (cls == 2 || cls == 3) out.multiply_inplace(code.logical_z[j]);
  return out;
}

}  // namespace

DecodeResult decode_marginal(const StabilizerCode& code, const Syndrome& s,
                             const NoiseModel& noise, const DecodeOptions& opts) {
  static constexpr Pauli kClassLabel[4] = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
  const ContractOptions copts{opts.width_cap_bits};
  DecodeResult result;
  result.pure_error = pure_error(code, s);
  result.correction = result.pure_error;
  const PauliString& f = result.pure_error;

  for (std::size_t j = 0; j < code.k; ++j) {
    std::vector<PauliString> extras;
    extras.reserve(2 * (code.k - 1));
    for (std::size_t i = 0; i < code.k; ++i) {
      if (i == j) continue;
      extras.push_back(code.logical_x[i]);
      extras.push_back(code.logical_z[i]);
    }

    std::array<double, 4> logp{};
    if (opts.backend == DecoderBackend::chain) {
      for (int cls = 0; cls < 4; ++cls)
        logp[cls] = contract_tanner_chain(code, class_string(f, code, j, cls),
                                          noise, extras, copts);
    } else if (!opts.reuse_prefix) {
      for (int cls = 0; cls < 4; ++cls)
        logp[cls] = coset_probability(code, class_string(f, code, j, cls),
                                      noise, extras, copts);
    } else {
      std::vector<PauliString> generators;
      generators.reserve(code.checks.size() + extras.size());
      generators.insert(generators.end(), code.checks.begin(), code.checks.end());
      generators.insert(generators.end(), extras.begin(), extras.end());
      const TnLayout layout = build_layout(generators, code.n_phys);

      // f_L of class c differs from class I only on the support of the
      // multiplied logical operators, so classes X/Z/Y replay the class-I
      // sweep from their first differing row.
      std::array<PauliString, 3> diffs = {code.logical_x[j], code.logical_z[j],
                                          code.logical_x[j] * code.logical_z[j]};
      std::array<std::size_t, 3> from_row{};
      for (int c = 0; c < 3; ++c) from_row[c] = diffs[c].support()->first;

      GridSweep sweep(layout, opts.width_cap_bits);
      std::array<GridSweep::Snapshot, 3> snapshots;
      std::array<bool, 3> saved{false, false, false};
      for (std::size_t r = 0; r < layout.n_rows; ++r) {
        for (int c = 0; c < 3; ++c)
          if (from_row[c] == r && !saved[c]) {
            snapshots[c] = sweep.save();
            saved[c] = true;
          }
        sweep.absorb_row(r, probability_tensor(noise, f.at(r)));
      }
      logp[0] = sweep.result();
      for (int cls = 1; cls < 4; ++cls) {
        const PauliString f_cls = f * diffs[cls - 1];
        const std::size_t from = from_row[cls - 1];
        sweep.restore(snapshots[cls - 1]);
        for (std::size_t r = from; r < layout.n_rows; ++r)
          sweep.absorb_row(r, probability_tensor(noise, f_cls.at(r)));
        logp[cls] = sweep.result();
      }
    }

    int best = 0;
    for (int cls = 1; cls < 4; ++cls)
      if (logp[cls] > logp[best]) best = cls;
    result.classes.push_back(kClassLabel[best]);
    result.log_probs.push_back(logp);
    if (best == 1 || best == 3) result.correction.multiply_inplace(code.logical_x[j]);
    if (best == 2 || best == 3) result.correction.multiply_inplace(code.logical_z[j]);
  }
  return result;
}

}  // namespace ldcc
