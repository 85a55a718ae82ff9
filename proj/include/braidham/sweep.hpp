#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "braidham/pipeline.hpp"

namespace braidham {

struct SweepSample {
  double mass;
  Momentum momentum;
};

/// Deterministic parameter draw for sample `index` of a sweep: m and |p|
/// log-uniform in [0.1, 10], direction uniform on the unit sphere. Each sample
/// has its own stream derived from (seed, index).
inline SweepSample draw_sweep_sample(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
  std::normal_distribution<double> gauss(0.0, 1.0);

  const double mass = std::exp(log_scale(rng));
  const double magnitude = std::exp(log_scale(rng));
  double x = 0.0, y = 0.0, z = 0.0, norm = 0.0;
  do {
    x = gauss(rng);
    y = gauss(rng);
    z = gauss(rng);
    norm = std::sqrt(x * x + y * y + z * z);
  } while (norm < 1e-6);
  return {mass, (magnitude / norm) * Momentum{x, y, z}};
}

struct SweepCheckSummary {
  std::string name;
  double max_residual = 0.0;
  bool pass = true;
};

struct SweepSummary {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double tol = 0.0;
  std::vector<SweepCheckSummary> checks;
  /// Smallest factor residual of R1 and R2 over all samples.
  double min_decomposability = std::numeric_limits<double>::infinity();
  std::uint64_t failed_samples = 0;
  bool pass = true;
};

/// Strict-mode derivation over `samples` random parameter sets. Aggregation
/// is a max over samples, so the summary does not depend on evaluation order.
inline SweepSummary run_sweep(std::uint64_t samples, std::uint64_t seed, Tolerance tol = {}) {
  if (samples < 1) throw PreconditionError("sweep: samples must be >= 1");
  SweepSummary summary;
  summary.seed = seed;
  summary.samples = samples;
  summary.tol = tol.abs_tol;
  for (const auto& name : strict_check_names()) summary.checks.push_back({name, 0.0, true});

  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto sample = draw_sweep_sample(seed, i);
    const auto report = run_derivation(DiracParams(sample.mass, sample.momentum), kAnyonTheta, tol);
    for (std::size_t c = 0; c < report.residuals.size(); ++c) {
      auto& check = summary.checks[c];
      check.max_residual = std::max(check.max_residual, report.residuals[c].residual);
    }
    const auto& d = report.decomposability;
    summary.min_decomposability =
        std::min({summary.min_decomposability, d.r1_left, d.r1_right, d.r2_left, d.r2_right});
    if (!report.pass) ++summary.failed_samples;
  }
  for (auto& check : summary.checks) {
    check.pass = check.max_residual < tol.abs_tol;
    summary.pass = summary.pass && check.pass;
  }
  summary.pass = summary.pass && summary.failed_samples == 0;
  return summary;
}

}  // namespace braidham
