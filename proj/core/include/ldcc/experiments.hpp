#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ldcc/code.hpp"
#include "ldcc/noise.hpp"
#include "ldcc/rng.hpp"
#include "ldcc/tn_decoder.hpp"

namespace ldcc {

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::vector<std::uint8_t> failures;  // bit j = 1 iff logical j failed
  bool valid = true;                   // false when the decoder hit a resource cap
};

/// failure bit j = residual anticommutes with encoded logical X_j or Z_j,
/// where residual = correction * actual error.
std::vector<std::uint8_t> evaluate_failures(const StabilizerCode& code,
                                            const PauliString& residual);

/// Samples an error, extracts the syndrome, decodes, and evaluates per-qubit
/// failures. Decoder resource errors mark the trial invalid.
TrialOutcome run_trial(const StabilizerCode& code, const NoiseModel& noise,
                       Rng& rng, const DecodeOptions& decode = {});

enum class CodeSampling : std::uint8_t { per_trial, fixed };

struct MonteCarloOptions {
  int workers = 0;  // 0 = available hardware parallelism
  CodeSampling sampling = CodeSampling::per_trial;
  DecodeOptions decode{};
};

/// Order-independent counts aggregated over a batch of trials. Per-trial
/// seeds are derive(master_seed, stream::kTrial, trial_index), so the counts
/// do not depend on the worker count or scheduling.
struct TrialAggregate {
  std::uint64_t requested = 0;
  std::uint64_t valid = 0;
  std::uint64_t invalid = 0;
  std::uint64_t any_failure = 0;
  std::vector<std::uint64_t> failures_per_logical;
  /// both_failed[i*k+j] for i<j; filled only when pair tracking is on.
  std::vector<std::uint64_t> both_failed;
};

TrialAggregate run_trials(const CodeParams& params, double p,
                          std::uint64_t trials, std::uint64_t master_seed,
                          const MonteCarloOptions& opts, bool track_pairs = false);

/// n_phys = n + 4d - 1/r + 1 for validated params.
std::size_t padded_qubit_count(const CodeParams& params);
/// Post-padding logical positions (independent of the sampled checks/gates).
std::vector<std::size_t> padded_logical_positions(const CodeParams& params);

struct ProfilePoint {
  std::size_t logical_index = 0;
  double index_over_k = 0.0;
  std::size_t position = 0;  // pre-encoding physical home in the padded chain
  std::uint64_t failures = 0;
  std::uint64_t trials = 0;
  double rate = 0.0;
  double std_error = 0.0;
};

struct Profile {
  CodeParams params;
  double p = 0.0;
  std::size_t n_phys = 0;
  std::uint64_t invalid = 0;
  std::uint64_t any_failure = 0;
  std::vector<ProfilePoint> points;
};

Profile failure_profile(const CodeParams& params, double p, std::uint64_t trials,
                        std::uint64_t master_seed, const MonteCarloOptions& opts);

struct BulkRate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t failures = 0;
  std::uint64_t pooled_trials = 0;
  std::size_t bulk_qubits = 0;
};

/// Pooled failure rate over logical qubits >= 4d physical sites from both
/// boundaries. Throws std::invalid_argument when the bulk set is empty.
BulkRate bulk_rate(const Profile& profile);

struct SweepPoint {
  double r = 0.0;
  int d = 0;
  std::size_t n = 0;
  std::size_t n_phys = 0;
  double p = 0.0;
  std::uint64_t trials = 0;  // valid trials entering the estimates
  std::uint64_t failures_bulk = 0;
  std::size_t bulk_qubits = 0;
  double p_l_prime = 0.0;
  double std_error = 0.0;
  double p_l = 0.0;
  CircuitVariant variant = CircuitVariant::standard;
  std::uint64_t seed = 0;
  std::uint64_t invalid = 0;
};

SweepPoint sweep_point(const CodeParams& params, double p, std::uint64_t trials,
                       std::uint64_t master_seed, const MonteCarloOptions& opts);

/// p_L' = A + B x + C x^2 with x = (p - p_c) d^(-1/nu).
struct ThresholdFit {
  double p_c = 0.0, p_c_err = 0.0;
  double nu = 0.0, nu_err = 0.0;
  double a = 0.0, a_err = 0.0;
  double b = 0.0, b_err = 0.0;
  double c = 0.0, c_err = 0.0;
  double residual = 0.0;  // sum of squared residuals at the optimum
};

/// Least-squares fit over (p_c, nu) with (A,B,C) solved linearly; standard
/// errors from a nonparametric bootstrap over the data points.
ThresholdFit threshold_fit(const std::vector<SweepPoint>& points,
                           Rng& bootstrap_rng, int n_bootstrap = 1000);

struct CorrelationPoint {
  std::size_t separation = 0;  // physical distance between pre-encoding homes
  double x_norm = 0.0;         // separation / (r d)
  double p2_given_1 = 0.0;
  double p2 = 0.0;
  double correlation = 0.0;  // P(2|1) - P(2)
  double std_error = 0.0;
  std::uint64_t cond_events = 0;
  bool low_stats = false;
};

std::vector<CorrelationPoint> correlations(const CodeParams& params, double p,
                                           std::uint64_t trials,
                                           std::uint64_t master_seed,
                                           const MonteCarloOptions& opts);

/// Correlation curve from precomputed counts (used for synthetic data).
std::vector<CorrelationPoint> correlation_curve(
    const TrialAggregate& agg, const std::vector<std::size_t>& positions,
    double rate_times_depth);

struct AlphaPoint {
  double alpha = 0.0;
  std::size_t n = 0, k = 0;
  int d = 0;
  std::size_t n_phys = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures_any = 0;
  double p_l = 0.0;
  double std_error = 0.0;
};

/// d = round(log2(k) / alpha), clamped to >= 1.
std::vector<AlphaPoint> alpha_scaling(std::size_t inv_rate, double p,
                                      const std::vector<double>& alphas,
                                      const std::vector<std::size_t>& ns,
                                      std::uint64_t trials,
                                      std::uint64_t master_seed,
                                      const MonteCarloOptions& opts);

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<int> used_depths;
  std::vector<int> excluded_depths;  // points with zero observed failures
  std::vector<SweepPoint> points;
};

/// Linear regression of ln p_L' on d over the given depths.
DecayFit decay_fit(double p, std::size_t inv_rate, const std::vector<int>& depths,
                   std::size_t n, std::uint64_t trials, std::uint64_t master_seed,
                   const MonteCarloOptions& opts);

/// Regression part of decay_fit on precomputed points (zero-failure points
/// are excluded and flagged).
DecayFit decay_fit_from_points(std::vector<SweepPoint> points);

/// CSV writers (shared by the CLI and the acceptance suite). `manifest` is an
/// optional leading comment line; pass "" for none. No timestamps: reruns
/// with the same seed are byte-identical.
std::string sweep_csv(const std::vector<SweepPoint>& points,
                      const std::string& manifest);
std::string profile_csv(const Profile& profile, const std::string& manifest);
std::string correlation_csv(const std::vector<CorrelationPoint>& points,
                            const std::string& manifest);
std::string alpha_csv(const std::vector<AlphaPoint>& points,
                      const std::string& manifest);
std::vector<SweepPoint> parse_sweep_csv(std::string_view text);

}  // namespace ldcc
