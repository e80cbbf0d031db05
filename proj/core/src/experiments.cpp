#include "ldcc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ldcc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double binomial_std_error(double rate, std::uint64_t n) {
  if (n == 0) return 0.0;
  return std::sqrt(rate * (1.0 - rate) / static_cast<double>(n));
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::vector<std::uint8_t> evaluate_failures(const StabilizerCode& code,
                                            const PauliString& residual) {
  std::vector<std::uint8_t> failures(code.k, 0);
  for (std::size_t j = 0; j < code.k; ++j) {
    const bool fail = symplectic_product(residual, code.logical_x[j]) != 0 ||
                      symplectic_product(residual, code.logical_z[j]) != 0;
    failures[j] = fail ? 1 : 0;
  }
  return failures;
}

TrialOutcome run_trial(const StabilizerCode& code, const NoiseModel& noise,
                       Rng& rng, const DecodeOptions& decode) {
  TrialOutcome outcome;
  const PauliString error = sample_error(noise, code.n_phys, rng);
  const Syndrome s = syndrome(code, error);
  DecodeResult decoded;
  try {
    decoded = decode_marginal(code, s, noise, decode);
  } catch (const ResourceError&) {
    outcome.valid = false;
    outcome.failures.assign(code.k, 0);
    return outcome;
  }
  outcome.failures = evaluate_failures(code, decoded.correction * error);
  return outcome;
}

TrialAggregate run_trials(const CodeParams& params, double p,
                          std::uint64_t trials, std::uint64_t master_seed,
                          const MonteCarloOptions& opts, bool track_pairs) {
  params.validate();
  const NoiseModel noise = depolarizing(p);
  const std::size_t k = params.k();

  StabilizerCode fixed_code;
  if (opts.sampling == CodeSampling::fixed) {
    CodeParams seeded = params;
    seeded.seed = master_seed;
    fixed_code = generate_code(seeded);
  }

  int workers = opts.workers > 0
                    ? opts.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > trials && trials > 0)
    workers = static_cast<int>(trials);

  std::vector<TrialAggregate> parts(static_cast<std::size_t>(workers));
  for (TrialAggregate& part : parts) {
    part.failures_per_logical.assign(k, 0);
    if (track_pairs) part.both_failed.assign(k * k, 0);
  }

  std::atomic<std::uint64_t> next{0};
  auto work = [&](int w) {
    TrialAggregate& agg = parts[static_cast<std::size_t>(w)];
    for (;;) {
      const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= trials) break;
      Rng rng = Rng::child(master_seed, stream::kTrial, i);
      StabilizerCode local;
      const StabilizerCode* code = &fixed_code;
      if (opts.sampling == CodeSampling::per_trial) {
        local = generate_code(params, rng);
        code = &local;
      }
      const TrialOutcome outcome = run_trial(*code, noise, rng, opts.decode);
      agg.requested += 1;
      if (!outcome.valid) {
        agg.invalid += 1;
        continue;
      }
      agg.valid += 1;
      bool any = false;
      for (std::size_t j = 0; j < k; ++j) {
        if (outcome.failures[j]) {
          agg.failures_per_logical[j] += 1;
          any = true;
        }
      }
      if (any) agg.any_failure += 1;
      if (track_pairs) {
        for (std::size_t a = 0; a < k; ++a) {
          if (!outcome.failures[a]) continue;
          for (std::size_t b = a + 1; b < k; ++b)
            if (outcome.failures[b]) agg.both_failed[a * k + b] += 1;
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }

  TrialAggregate total;
  total.failures_per_logical.assign(k, 0);
  if (track_pairs) total.both_failed.assign(k * k, 0);
  for (const TrialAggregate& part : parts) {
    total.requested += part.requested;
    total.valid += part.valid;
    total.invalid += part.invalid;
    total.any_failure += part.any_failure;
    for (std::size_t j = 0; j < k; ++j)
      total.failures_per_logical[j] += part.failures_per_logical[j];
    if (track_pairs)
      for (std::size_t i = 0; i < k * k; ++i)
        total.both_failed[i] += part.both_failed[i];
  }
  return total;
}

std::size_t padded_qubit_count(const CodeParams& params) {
  params.validate();
  const long extra = 4l * params.depth - static_cast<long>(params.inv_rate) + 1;
  if (extra < 0 || static_cast<long>(params.n) + extra <= 0)
    throw std::invalid_argument("padded_qubit_count: invalid padding");
  return params.n + static_cast<std::size_t>(extra);
}

std::vector<std::size_t> padded_logical_positions(const CodeParams& params) {
  params.validate();
  // Positions depend only on the deterministic spacing and padding split.
  Rng rng(0);
  const StabilizerCode initial = build_initial_code(params.n, params.k(), rng);
  const StabilizerCode padded =
      pad_boundary(initial, params.depth, params.inv_rate, rng);
  return padded.logical_positions;
}

Profile failure_profile(const CodeParams& params, double p, std::uint64_t trials,
                        std::uint64_t master_seed, const MonteCarloOptions& opts) {
  if (trials < 1) throw std::invalid_argument("failure_profile: trials >= 1");
  const TrialAggregate agg = run_trials(params, p, trials, master_seed, opts);
  Profile profile;
  profile.params = params;
  profile.p = p;
  profile.n_phys = padded_qubit_count(params);
  profile.invalid = agg.invalid;
  profile.any_failure = agg.any_failure;
  const std::vector<std::size_t> positions = padded_logical_positions(params);
  const std::size_t k = params.k();
  for (std::size_t j = 0; j < k; ++j) {
    ProfilePoint point;
    point.logical_index = j;
    point.index_over_k = static_cast<double>(j) / static_cast<double>(k);
    point.position = positions[j];
    point.failures = agg.failures_per_logical[j];
    point.trials = agg.valid;
    point.rate = agg.valid ? static_cast<double>(point.failures) /
                                 static_cast<double>(agg.valid)
                           : 0.0;
    point.std_error = binomial_std_error(point.rate, agg.valid);
    profile.points.push_back(point);
  }
  return profile;
}

BulkRate bulk_rate(const Profile& profile) {
  if (profile.points.empty())
    throw std::invalid_argument("bulk_rate: empty profile");
  const std::size_t margin = 4 * static_cast<std::size_t>(profile.params.depth);
  BulkRate bulk;
  for (const ProfilePoint& point : profile.points) {
    if (point.position < margin) continue;
    if (profile.n_phys - 1 - point.position < margin) continue;
    bulk.failures += point.failures;
    bulk.pooled_trials += point.trials;
    bulk.bulk_qubits += 1;
  }
  if (bulk.bulk_qubits == 0)
    throw std::invalid_argument("bulk_rate: no logical qubit is 4d from both ends");
  bulk.value = bulk.pooled_trials ? static_cast<double>(bulk.failures) /
                                        static_cast<double>(bulk.pooled_trials)
                                  : 0.0;
  bulk.std_error = binomial_std_error(bulk.value, bulk.pooled_trials);
  return bulk;
}

SweepPoint sweep_point(const CodeParams& params, double p, std::uint64_t trials,
                       std::uint64_t master_seed, const MonteCarloOptions& opts) {
  const Profile profile = failure_profile(params, p, trials, master_seed, opts);
  const BulkRate bulk = bulk_rate(profile);
  SweepPoint point;
  point.r = params.rate();
  point.d = params.depth;
  point.n = params.n;
  point.n_phys = profile.n_phys;
  point.p = p;
  point.trials = profile.points.front().trials;
  point.failures_bulk = bulk.failures;
  point.bulk_qubits = bulk.bulk_qubits;
  point.p_l_prime = bulk.value;
  point.std_error = bulk.std_error;
  point.p_l = point.trials ? static_cast<double>(profile.any_failure) /
                                 static_cast<double>(point.trials)
                           : 0.0;
  point.variant = params.variant;
  point.seed = master_seed;
  point.invalid = profile.invalid;
  return point;
}

namespace {

struct QuadSolution {
  double a = 0.0, b = 0.0, c = 0.0;
  double sse = kInf;
  bool ok = false;
};

// Least squares of y on [1, x, x^2] via 3x3 normal equations.
QuadSolution quadratic_lsq(const std::vector<double>& x,
                           const std::vector<double>& y) {
  const std::size_t n = x.size();
  double s[5] = {static_cast<double>(n), 0, 0, 0, 0};
  double t[3] = {0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double x1 = x[i], x2 = x1 * x1;
    s[1] += x1;
    s[2] += x2;
    s[3] += x2 * x1;
    s[4] += x2 * x2;
    t[0] += y[i];
    t[1] += x1 * y[i];
    t[2] += x2 * y[i];
  }
  double m[3][4] = {{s[0], s[1], s[2], t[0]},
                    {s[1], s[2], s[3], t[1]},
                    {s[2], s[3], s[4], t[2]}};
  QuadSolution out;
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) < 1e-12 * std::max(1.0, std::abs(s[0])))
      return out;  // degenerate design matrix
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double factor = m[r][col] / m[col][col];
      for (int cc = col; cc < 4; ++cc) m[r][cc] -= factor * m[col][cc];
    }
  }
  out.a = m[0][3] / m[0][0];
  out.b = m[1][3] / m[1][1];
  out.c = m[2][3] / m[2][2];
  out.sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = out.a + out.b * x[i] + out.c * x[i] * x[i];
    out.sse += (y[i] - fit) * (y[i] - fit);
  }
  out.ok = true;
  return out;
}

struct FitSample {
  double p = 0.0;
  double d = 0.0;
  double y = 0.0;
};

QuadSolution fit_at(const std::vector<FitSample>& data, double p_c, double nu) {
  std::vector<double> x(data.size()), y(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    x[i] = (data[i].p - p_c) * std::pow(data[i].d, -1.0 / nu);
    y[i] = data[i].y;
  }
  return quadratic_lsq(x, y);
}

struct FitPoint {
  double p_c = 0.0;
  double log_nu = 0.0;
};

double fit_objective(const std::vector<FitSample>& data, double p_lo,
                     double p_hi, const FitPoint& at) {
  const double nu = std::exp(at.log_nu);
  if (!(at.p_c > 0.0 && at.p_c < 0.75)) return kInf;
  if (at.p_c < p_lo - 0.1 || at.p_c > p_hi + 0.1) return kInf;
  if (!(nu > 1e-3 && nu < 1e3)) return kInf;
  const QuadSolution sol = fit_at(data, at.p_c, nu);
  return sol.ok ? sol.sse : kInf;
}

// 2D Nelder-Mead over (p_c, log nu).
FitPoint nelder_mead(const std::vector<FitSample>& data, double p_lo,
                     double p_hi, FitPoint start, int max_iter) {
  std::array<FitPoint, 3> simplex = {
      start, FitPoint{start.p_c + 0.004, start.log_nu},
      FitPoint{start.p_c, start.log_nu + 0.05}};
  std::array<double, 3> value{};
  auto eval = [&](const FitPoint& pt) { return fit_objective(data, p_lo, p_hi, pt); };
  for (int i = 0; i < 3; ++i) value[i] = eval(simplex[i]);

  for (int iter = 0; iter < max_iter; ++iter) {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return value[a] < value[b]; });
    const int lo = idx[0], mid = idx[1], hi = idx[2];
    if (value[hi] - value[lo] <= 1e-18 + 1e-14 * std::abs(value[lo])) break;
    const FitPoint centroid{
        0.5 * (simplex[lo].p_c + simplex[mid].p_c),
        0.5 * (simplex[lo].log_nu + simplex[mid].log_nu)};
    auto blend = [&](double t) {
      return FitPoint{centroid.p_c + t * (centroid.p_c - simplex[hi].p_c),
                      centroid.log_nu + t * (centroid.log_nu - simplex[hi].log_nu)};
    };
    const FitPoint reflect = blend(1.0);
    const double f_reflect = eval(reflect);
    if (f_reflect < value[lo]) {
      const FitPoint expand = blend(2.0);
      const double f_expand = eval(expand);
      if (f_expand < f_reflect) {
        simplex[hi] = expand;
        value[hi] = f_expand;
      } else {
        simplex[hi] = reflect;
        value[hi] = f_reflect;
      }
    } else if (f_reflect < value[mid]) {
      simplex[hi] = reflect;
      value[hi] = f_reflect;
    } else {
      const FitPoint contract = blend(f_reflect < value[hi] ? 0.5 : -0.5);
      const double f_contract = eval(contract);
      if (f_contract < std::min(f_reflect, value[hi])) {
        simplex[hi] = contract;
        value[hi] = f_contract;
      } else {
        for (int i : {mid, hi}) {
          simplex[i].p_c = 0.5 * (simplex[i].p_c + simplex[lo].p_c);
          simplex[i].log_nu = 0.5 * (simplex[i].log_nu + simplex[lo].log_nu);
          value[i] = eval(simplex[i]);
        }
      }
    }
  }
  std::array<int, 3> idx = {0, 1, 2};
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return value[a] < value[b]; });
  return simplex[idx[0]];
}

struct FullFit {
  double p_c = 0.0, nu = 0.0, a = 0.0, b = 0.0, c = 0.0, sse = 0.0;
  bool ok = false;
};

FullFit full_fit(const std::vector<FitSample>& data, bool coarse_grid,
                 FitPoint warm_start) {
  double p_lo = kInf, p_hi = -kInf;
  for (const FitSample& sample : data) {
    p_lo = std::min(p_lo, sample.p);
    p_hi = std::max(p_hi, sample.p);
  }
  FitPoint start = warm_start;
  if (coarse_grid) {
    double best = kInf;
    for (int i = 0; i <= 40; ++i) {
      const double p_c = p_lo + (p_hi - p_lo) * i / 40.0;
      for (int j = 0; j <= 20; ++j) {
        const double log_nu = std::log(0.25) + (std::log(4.0) - std::log(0.25)) * j / 20.0;
        const double sse = fit_objective(data, p_lo, p_hi, FitPoint{p_c, log_nu});
        if (sse < best) {
          best = sse;
          start = FitPoint{p_c, log_nu};
        }
      }
    }
  }
  const FitPoint opt = nelder_mead(data, p_lo, p_hi, start, 500);
  const double nu = std::exp(opt.log_nu);
  const QuadSolution sol = fit_at(data, opt.p_c, nu);
  FullFit fit;
  if (!sol.ok) return fit;
  fit.p_c = opt.p_c;
  fit.nu = nu;
  fit.a = sol.a;
  fit.b = sol.b;
  fit.c = sol.c;
  fit.sse = sol.sse;
  fit.ok = true;
  return fit;
}

}  // namespace

ThresholdFit threshold_fit(const std::vector<SweepPoint>& points,
                           Rng& bootstrap_rng, int n_bootstrap) {
  std::map<int, std::size_t> per_depth;
  for (const SweepPoint& point : points) per_depth[point.d] += 1;
  if (per_depth.size() < 2)
    throw std::invalid_argument("threshold_fit: need >= 2 distinct depths");
  for (const auto& [d, count] : per_depth)
    if (count < 3)
      throw std::invalid_argument("threshold_fit: need >= 3 points per depth");

  std::vector<FitSample> data;
  data.reserve(points.size());
  for (const SweepPoint& point : points)
    data.push_back(FitSample{point.p, static_cast<double>(point.d), point.p_l_prime});

  const FullFit fit = full_fit(data, true, FitPoint{});
  if (!fit.ok)
    throw std::invalid_argument("threshold_fit: degenerate design matrix");

  ThresholdFit out;
  out.p_c = fit.p_c;
  out.nu = fit.nu;
  out.a = fit.a;
  out.b = fit.b;
  out.c = fit.c;
  out.residual = fit.sse;

  // Nonparametric bootstrap over data points, refit from the full-fit optimum.
  std::vector<double> pc_s, nu_s, a_s, b_s, c_s;
  const FitPoint warm{fit.p_c, std::log(fit.nu)};
  for (int rep = 0; rep < n_bootstrap; ++rep) {
    std::vector<FitSample> resample(data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
      resample[i] = data[bootstrap_rng.uniform_below(
          static_cast<std::uint32_t>(data.size()))];
    const FullFit refit = full_fit(resample, false, warm);
    if (!refit.ok) continue;
    pc_s.push_back(refit.p_c);
    nu_s.push_back(refit.nu);
    a_s.push_back(refit.a);
    b_s.push_back(refit.b);
    c_s.push_back(refit.c);
  }
  auto sample_std = [](const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    return std::sqrt(var / static_cast<double>(v.size() - 1));
  };
  out.p_c_err = sample_std(pc_s);
  out.nu_err = sample_std(nu_s);
  out.a_err = sample_std(a_s);
  out.b_err = sample_std(b_s);
  out.c_err = sample_std(c_s);
  return out;
}

std::vector<CorrelationPoint> correlation_curve(
    const TrialAggregate& agg, const std::vector<std::size_t>& positions,
    double rate_times_depth) {
  const std::size_t k = positions.size();
  if (k < 2) throw std::invalid_argument("correlation_curve: need k >= 2");
  struct Accum {
    std::uint64_t both = 0;
    std::uint64_t cond = 0;     // conditioning events: qubit-1 failures
    std::uint64_t fails_2 = 0;  // qubit-2 failures
    std::uint64_t pairs = 0;
  };
  std::map<std::size_t, Accum> by_separation;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const std::size_t sep = positions[i] < positions[j]
                                  ? positions[j] - positions[i]
                                  : positions[i] - positions[j];
      Accum& acc = by_separation[sep];
      const std::size_t lo = std::min(i, j), hi = std::max(i, j);
      acc.both += agg.both_failed[lo * k + hi];
      acc.cond += agg.failures_per_logical[i];
      acc.fails_2 += agg.failures_per_logical[j];
      acc.pairs += 1;
    }
  }
  std::vector<CorrelationPoint> curve;
  for (const auto& [sep, acc] : by_separation) {
    CorrelationPoint point;
    point.separation = sep;
    point.x_norm = static_cast<double>(sep) / rate_times_depth;
    point.cond_events = acc.cond;
    const double denom2 =
        static_cast<double>(acc.pairs) * static_cast<double>(agg.valid);
    point.p2 = denom2 > 0 ? static_cast<double>(acc.fails_2) / denom2 : 0.0;
    if (acc.cond > 0) {
      point.p2_given_1 =
          static_cast<double>(acc.both) / static_cast<double>(acc.cond);
      point.correlation = point.p2_given_1 - point.p2;
    }
    point.low_stats = acc.cond < 100;
    const double var1 =
        acc.cond > 0
            ? point.p2_given_1 * (1.0 - point.p2_given_1) / static_cast<double>(acc.cond)
            : 0.0;
    const double var2 = denom2 > 0 ? point.p2 * (1.0 - point.p2) / denom2 : 0.0;
    point.std_error = std::sqrt(var1 + var2);
    curve.push_back(point);
  }
  return curve;
}

std::vector<CorrelationPoint> correlations(const CodeParams& params, double p,
                                           std::uint64_t trials,
                                           std::uint64_t master_seed,
                                           const MonteCarloOptions& opts) {
  params.validate();
  if (params.k() < 2) throw std::invalid_argument("correlations: need k >= 2");
  const TrialAggregate agg =
      run_trials(params, p, trials, master_seed, opts, /*track_pairs=*/true);
  const std::vector<std::size_t> positions = padded_logical_positions(params);
  return correlation_curve(agg, positions,
                           params.rate() * static_cast<double>(params.depth));
}

std::vector<AlphaPoint> alpha_scaling(std::size_t inv_rate, double p,
                                      const std::vector<double>& alphas,
                                      const std::vector<std::size_t>& ns,
                                      std::uint64_t trials,
                                      std::uint64_t master_seed,
                                      const MonteCarloOptions& opts) {
  std::vector<AlphaPoint> points;
  std::uint64_t point_index = 0;
  for (double alpha : alphas) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha_scaling: alpha > 0");
    for (std::size_t n : ns) {
      CodeParams params;
      params.n = n;
      params.inv_rate = inv_rate;
      const std::size_t k = n / inv_rate;
      const double d_raw = std::log2(static_cast<double>(k)) / alpha;
      params.depth = std::max(1, static_cast<int>(std::llround(d_raw)));
      params.validate();
      const std::uint64_t point_seed =
          Rng::derive(master_seed, stream::kPoint, point_index++);
      const TrialAggregate agg = run_trials(params, p, trials, point_seed, opts);
      AlphaPoint point;
      point.alpha = alpha;
      point.n = n;
      point.k = k;
      point.d = params.depth;
      point.n_phys = padded_qubit_count(params);
      point.p = p;
      point.trials = agg.valid;
      point.failures_any = agg.any_failure;
      point.p_l = agg.valid ? static_cast<double>(agg.any_failure) /
                                  static_cast<double>(agg.valid)
                            : 0.0;
      point.std_error = binomial_std_error(point.p_l, agg.valid);
      points.push_back(point);
    }
  }
  return points;
}

DecayFit decay_fit_from_points(std::vector<SweepPoint> points) {
  DecayFit fit;
  fit.points = std::move(points);
  std::vector<double> xs, ys;
  for (const SweepPoint& point : fit.points) {
    if (point.failures_bulk == 0) {
      fit.excluded_depths.push_back(point.d);
      continue;
    }
    fit.used_depths.push_back(point.d);
    xs.push_back(static_cast<double>(point.d));
    ys.push_back(std::log(point.p_l_prime));
  }
  if (xs.size() < 2)
    throw std::invalid_argument("decay_fit: fewer than 2 nonzero points");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12)
    throw std::invalid_argument("decay_fit: degenerate depths");
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double sse = 0, sst = 0;
  const double mean = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    sse += r * r;
    sst += (ys[i] - mean) * (ys[i] - mean);
  }
  fit.r_squared = sst > 0 ? 1.0 - sse / sst : 1.0;
  return fit;
}

DecayFit decay_fit(double p, std::size_t inv_rate, const std::vector<int>& depths,
                   std::size_t n, std::uint64_t trials, std::uint64_t master_seed,
                   const MonteCarloOptions& opts) {
  if (depths.size() < 3)
    throw std::invalid_argument("decay_fit: need >= 3 depths");
  std::vector<SweepPoint> points;
  std::uint64_t point_index = 0;
  for (int d : depths) {
    CodeParams params;
    params.n = n;
    params.inv_rate = inv_rate;
    params.depth = d;
    const std::uint64_t point_seed =
        Rng::derive(master_seed, stream::kPoint, point_index++);
    points.push_back(sweep_point(params, p, trials, point_seed, opts));
  }
  return decay_fit_from_points(std::move(points));
}

std::string sweep_csv(const std::vector<SweepPoint>& points,
                      const std::string& manifest) {
  std::ostringstream out;
  if (!manifest.empty()) out << "# " << manifest << '\n';
  out << "r,d,n,n_phys,p,trials,failures_bulk,bulk_qubits,p_L_prime,stderr,"
         "p_L,variant,seed\n";
  for (const SweepPoint& pt : points) {
    out << fmt_g(pt.r) << ',' << pt.d << ',' << pt.n << ',' << pt.n_phys << ','
        << fmt_g(pt.p) << ',' << pt.trials << ',' << pt.failures_bulk << ','
        << pt.bulk_qubits << ',' << fmt_g(pt.p_l_prime) << ','
        << fmt_g(pt.std_error) << ',' << fmt_g(pt.p_l) << ','
        << variant_name(pt.variant) << ',' << pt.seed << '\n';
  }
  return out.str();
}

std::string profile_csv(const Profile& profile, const std::string& manifest) {
  std::ostringstream out;
  if (!manifest.empty()) out << "# " << manifest << '\n';
  out << "logical_index,index_over_k,position,failures,trials,rate,stderr\n";
  for (const ProfilePoint& pt : profile.points) {
    out << pt.logical_index << ',' << fmt_g(pt.index_over_k) << ',' << pt.position
        << ',' << pt.failures << ',' << pt.trials << ',' << fmt_g(pt.rate) << ','
        << fmt_g(pt.std_error) << '\n';
  }
  return out.str();
}

std::string correlation_csv(const std::vector<CorrelationPoint>& points,
                            const std::string& manifest) {
  std::ostringstream out;
  if (!manifest.empty()) out << "# " << manifest << '\n';
  out << "separation,x_norm,p2_given_1,p2,correlation,stderr,cond_events,"
         "low_stats\n";
  for (const CorrelationPoint& pt : points) {
    out << pt.separation << ',' << fmt_g(pt.x_norm) << ',' << fmt_g(pt.p2_given_1)
        << ',' << fmt_g(pt.p2) << ',' << fmt_g(pt.correlation) << ','
        << fmt_g(pt.std_error) << ',' << pt.cond_events << ','
        << (pt.low_stats ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string alpha_csv(const std::vector<AlphaPoint>& points,
                      const std::string& manifest) {
  std::ostringstream out;
  if (!manifest.empty()) out << "# " << manifest << '\n';
  out << "alpha,n,k,d,n_phys,p,trials,failures_any,p_L,stderr\n";
  for (const AlphaPoint& pt : points) {
    out << fmt_g(pt.alpha) << ',' << pt.n << ',' << pt.k << ',' << pt.d << ','
        << pt.n_phys << ',' << fmt_g(pt.p) << ',' << pt.trials << ','
        << pt.failures_any << ',' << fmt_g(pt.p_l) << ',' << fmt_g(pt.std_error)
        << '\n';
  }
  return out.str();
}

std::vector<SweepPoint> parse_sweep_csv(std::string_view text) {
  std::vector<SweepPoint> points;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("r,", 0) == 0) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 13)
      throw std::invalid_argument("parse_sweep_csv: expected 13 columns");
    SweepPoint pt;
    pt.r = std::stod(fields[0]);
    pt.d = std::stoi(fields[1]);
    pt.n = std::stoull(fields[2]);
    pt.n_phys = std::stoull(fields[3]);
    pt.p = std::stod(fields[4]);
    pt.trials = std::stoull(fields[5]);
    pt.failures_bulk = std::stoull(fields[6]);
    pt.bulk_qubits = std::stoull(fields[7]);
    pt.p_l_prime = std::stod(fields[8]);
    pt.std_error = std::stod(fields[9]);
    pt.p_l = std::stod(fields[10]);
    pt.variant = variant_from_name(fields[11]);
    pt.seed = std::stoull(fields[12]);
    points.push_back(pt);
  }
  return points;
}

}  // namespace ldcc
