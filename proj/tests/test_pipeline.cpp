#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "braidham/pipeline.hpp"
#include "braidham/sweep.hpp"
#include "oracle.hpp"

using namespace braidham;

namespace {

const double kPi = std::numbers::pi;
using oracle::cd;
using oracle::Mat;

// Step-by-step recomputation of the derivation in Eigen, following the
// printed formulas literally (E - m computed directly, matrix exponential by
// eigendecomposition, H from its Ep/m-normalized form).
struct OracleRun {
  Mat hd, r1, v, r1_prime, r2, h_closed;
};

OracleRun oracle_run(double m, double p1, double p2, double p3) {
  const double p = std::sqrt(p1 * p1 + p2 * p2 + p3 * p3);
  const double e = std::sqrt(p * p + m * m);
  const Mat beta = oracle::kron(oracle::sigma(3), Mat::Identity(2, 2));
  Mat pa = Mat::Zero(4, 4);
  const double comps[3] = {p1, p2, p3};
  for (int i = 0; i < 3; ++i) pa += comps[i] * oracle::kron(oracle::sigma(1), oracle::sigma(i + 1));

  OracleRun run;
  run.hd = (m * beta + pa) / e;
  run.r1 = oracle::exp_hermitian(run.hd, -kPi / 2.0);

  const double up = std::sqrt(e + m);
  const double um = std::sqrt(e - m);
  const cd pp(p1, p2), pm(p1, -p2);
  run.v.resize(4, 4);
  run.v << pp / um, -p3 / um, 0.0, um,
           -pp / up, p3 / up, 0.0, up,
           p3 / um, pm / um, um, 0.0,
           -p3 / up, -pm / up, up, 0.0;
  run.v /= std::sqrt(2.0 * e);

  run.r1_prime = run.v * run.r1 * run.v.adjoint();
  Mat b(2, 2);
  b << 1.0, cd(0, 1), cd(0, 1), 1.0;
  b /= std::sqrt(2.0);
  run.r2 = run.v.adjoint() * oracle::kron(Mat::Identity(2, 2), b) * run.v;
  const double scale = e * p / m;
  run.h_closed = ((p * p / m) * beta - pa) / scale;
  return run;
}

double check(const DerivationReport& r, const std::string& name) {
  const auto v = r.residual(name);
  EXPECT_TRUE(v.has_value()) << name;
  return v.value_or(1e300);
}

}  // namespace

TEST(BuildV, ThreeFourFiveMatrix) {
  const DiracParams params(3.0, Momentum{0, 0, 4});
  const double s2 = std::sqrt(2.0);
  const ComplexMatrix expected = (1.0 / std::sqrt(10.0)) * ComplexMatrix{{0.0, -2 * s2, 0.0, s2},
                                                                          {0.0, s2, 0.0, 2 * s2},
                                                                          {2 * s2, 0.0, s2, 0.0},
                                                                          {-s2, 0.0, 2 * s2, 0.0}};
  const auto v = build_V(params);
  EXPECT_LT(frobenius_distance(v, expected), 1e-15);
  EXPECT_LT(frobenius_distance(v * v.adjoint(), ComplexMatrix::identity(4)), 1e-15);
}

TEST(BuildV, ComplexEntriesAndUnitarity) {
  const DiracParams params(1.0, Momentum{1, 0, 0});
  const auto v = build_V(params);
  EXPECT_LT(frobenius_distance(v * v.adjoint(), ComplexMatrix::identity(4)), 1e-15);
  const auto ref = oracle_run(1.0, 1.0, 0.0, 0.0);
  EXPECT_LT(oracle::distance(oracle::to_eigen(v), ref.v), 1e-14);

  std::mt19937_64 rng(31);
  std::normal_distribution<double> g(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const DiracParams random(std::abs(g(rng)) + 0.05, Momentum{g(rng), g(rng), g(rng)});
    const auto rv = build_V(random);
    EXPECT_LT(frobenius_distance(rv * rv.adjoint(), ComplexMatrix::identity(4)), 1e-12);
  }
}

TEST(CheckDiagonalization, ThreeFourFiveAndNegativeCases) {
  const DiracParams params(3.0, Momentum{0, 0, 4});
  const auto hd = dirac_hamiltonian(params);
  EXPECT_LT(check_diagonalization(build_V(params), hd), 1e-12);
  EXPECT_GT(check_diagonalization(ComplexMatrix::identity(4), hd), 0.1);

  std::mt19937_64 rng(6);
  const auto random_v = oracle::from_eigen(oracle::random_unitary(4, rng));
  const double r = check_diagonalization(random_v, hd);
  const Mat target = oracle::kron(Mat::Identity(2, 2), oracle::sigma(3));
  const Mat ev = oracle::to_eigen(random_v);
  EXPECT_NEAR(r, oracle::distance(ev * oracle::to_eigen(hd.matrix) * ev.adjoint(), target), 1e-13);
  EXPECT_GT(r, 0.1);
}

TEST(RunDerivation, ThreeFourFiveAgainstOracle) {
  const DiracParams params(3.0, Momentum{0, 0, 4});
  const auto report = run_derivation(params);
  EXPECT_TRUE(report.pass);
  ASSERT_EQ(report.residuals.size(), strict_check_names().size());
  for (std::size_t i = 0; i < report.residuals.size(); ++i) {
    EXPECT_EQ(report.residuals[i].name, strict_check_names()[i]);
    EXPECT_LT(report.residuals[i].residual, 1e-12) << report.residuals[i].name;
  }
  EXPECT_EQ(report.order_a, 8);
  EXPECT_EQ(report.order_b, 8);
  const auto& d = report.decomposability;
  for (double r : {d.r1_left, d.r1_right, d.r2_left, d.r2_right}) EXPECT_GT(r, 0.1);

  const auto ref = oracle_run(3.0, 0.0, 0.0, 4.0);
  EXPECT_LT(oracle::distance(oracle::to_eigen(report.extracted_hamiltonian), ref.h_closed), 1e-13);
  EXPECT_NEAR(d.r1_left, oracle::pattern_residual(ref.r1, true), 1e-13);
  EXPECT_NEAR(d.r1_right, oracle::pattern_residual(ref.r1, false), 1e-13);
  EXPECT_NEAR(d.r2_left, oracle::pattern_residual(ref.r2, true), 1e-13);
  EXPECT_NEAR(d.r2_right, oracle::pattern_residual(ref.r2, false), 1e-13);
}

TEST(RunDerivation, GenericDirection) {
  const double c = 2.0 / std::sqrt(3.0);
  const DiracParams params(1.0, Momentum{c, c, c});
  const auto report = run_derivation(params);
  EXPECT_TRUE(report.pass);
  const auto ref = oracle_run(1.0, c, c, c);
  EXPECT_LT(oracle::distance(oracle::to_eigen(report.extracted_hamiltonian), ref.h_closed), 1e-13);
  EXPECT_LT(oracle::distance(ref.r1_prime,
                             oracle::kron(Mat::Identity(2, 2),
                                          oracle::to_eigen(anyon_a(kAnyonTheta)))),
            1e-13);
}

TEST(RunDerivation, StrictModeRejectsOtherAngles) {
  const DiracParams params(3.0, Momentum{0, 0, 4});
  EXPECT_THROW(run_derivation(params, 0.0), UnsupportedAngleError);
  EXPECT_THROW(run_derivation(params, 0.1), UnsupportedAngleError);
  EXPECT_THROW(run_derivation(params, std::nan("")), UnsupportedAngleError);
  EXPECT_NO_THROW(run_derivation(params, -kPi / 2.0));
}

TEST(RunDerivation, ExploratoryModeAtGeneralAngle) {
  const DiracParams params(2.0, Momentum{0.3, -1.1, 0.4});
  const auto report = run_derivation(params, 2.0, Tolerance{}, AngleMode::Exploratory);
  EXPECT_TRUE(report.pass);
  EXPECT_FALSE(report.residual("bogoliubov_match"));
  EXPECT_LT(check(report, "r1_block_form"), 1e-12);
  EXPECT_LT(check(report, "braid_relation"), 1e-9);
  EXPECT_LT(check(report, "h_involution"), 1e-9);
  EXPECT_LT(check(report, "h_hermiticity"), 1e-9);

  // At the anyon angle the exploratory pipeline reproduces a valid partner too.
  const auto anyon = run_derivation(params, kAnyonTheta, Tolerance{}, AngleMode::Exploratory);
  EXPECT_TRUE(anyon.pass);
}

TEST(RunDerivation, ExploratoryModeDegenerateAngles) {
  const DiracParams params(2.0, Momentum{0.3, -1.1, 0.4});
  EXPECT_THROW(run_derivation(params, 0.0, Tolerance{}, AngleMode::Exploratory),
               UnsupportedAngleError);
  ExploratoryOptions opts;
  opts.solver.max_restarts = 4;
  EXPECT_THROW(run_derivation(params, 0.1, Tolerance{}, AngleMode::Exploratory, opts),
               std::runtime_error);
}

TEST(RunDerivation, DomainFloorsPropagate) {
  EXPECT_THROW(run_derivation(DiracParams(1.0, Momentum{})), DomainError);
}

TEST(RunDerivation, RandomParametersAllResidualsSmall) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double m = std::exp(log_scale(rng));
    Momentum dir{g(rng), g(rng), g(rng)};
    const DiracParams params(m, (std::exp(log_scale(rng)) / dir.magnitude()) * dir);
    const auto report = run_derivation(params);
    ASSERT_LT(report.max_residual(), 1e-11);

    // Conjugation consistency on the intermediates.
    const auto v = build_V(params);
    const auto r1 = q_deform(dirac_hamiltonian(params), kAnyonTheta);
    const auto r1_prime = v * r1 * v.adjoint();
    ASSERT_LT(frobenius_distance(v.adjoint() * r1_prime * v, r1), 1e-13);
    ASSERT_LT(kron_factor_residuals(r1_prime).right_residual, 1e-13);
    ASSERT_LT(kron_factor_residuals(kron(ComplexMatrix::identity(2), anyon_b())).right_residual,
              1e-13);
  }
}

TEST(RunDerivation, GenericMomentaAreNotTensorFactors) {
  // Off-axis momenta with m / |p| in [1/10, 10]; the left factor residuals of
  // R1 and R2 scale like |p|/E and m/E, so the ratio bound keeps them away from 0.
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> log_ratio(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> component(0.2, 1.0);
  std::bernoulli_distribution sign(0.5);
  for (int trial = 0; trial < 500; ++trial) {
    Momentum dir{component(rng) * (sign(rng) ? 1 : -1), component(rng) * (sign(rng) ? 1 : -1),
                 component(rng) * (sign(rng) ? 1 : -1)};
    const double p = 1.0 + 4.0 * component(rng);
    const DiracParams params(p * std::exp(log_ratio(rng)), (p / dir.magnitude()) * dir);
    const auto d = run_derivation(params).decomposability;
    ASSERT_GT(d.r1_left, 0.05);
    ASSERT_GT(d.r1_right, 0.05);
    ASSERT_GT(d.r2_left, 0.05);
    ASSERT_GT(d.r2_right, 0.05);
  }
}

TEST(RunDerivation, ReportIsDeterministic) {
  const DiracParams params(0.7, Momentum{1.3, -0.2, 0.9});
  const auto a = run_derivation(params);
  const auto b = run_derivation(params);
  ASSERT_EQ(a.residuals.size(), b.residuals.size());
  for (std::size_t i = 0; i < a.residuals.size(); ++i) {
    EXPECT_EQ(a.residuals[i].residual, b.residuals[i].residual);
  }
  EXPECT_EQ(a.extracted_hamiltonian, b.extracted_hamiltonian);
}

TEST(Sweep, SamplesAreDeterministicAndInRange) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto s = draw_sweep_sample(42, i);
    const auto again = draw_sweep_sample(42, i);
    EXPECT_EQ(s.mass, again.mass);
    EXPECT_EQ(s.momentum.p1, again.momentum.p1);
    EXPECT_GE(s.mass, 0.1 - 1e-12);
    EXPECT_LE(s.mass, 10.0 + 1e-12);
    EXPECT_GE(s.momentum.magnitude(), 0.1 - 1e-12);
    EXPECT_LE(s.momentum.magnitude(), 10.0 + 1e-12);
  }
  EXPECT_NE(draw_sweep_sample(1, 0).mass, draw_sweep_sample(2, 0).mass);
}

TEST(Sweep, SummaryPassesAndRejectsZeroSamples) {
  const auto summary = run_sweep(200, 3, Tolerance{1e-11});
  EXPECT_TRUE(summary.pass);
  EXPECT_EQ(summary.failed_samples, 0u);
  EXPECT_EQ(summary.checks.size(), strict_check_names().size());
  EXPECT_THROW(run_sweep(0, 3), PreconditionError);
}
