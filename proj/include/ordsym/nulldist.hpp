#pragma once

#include <string>

#include "ordsym/longrun.hpp"

namespace ordsym {

// Monte Carlo sample of the limiting law S_t(p_hat) + c_hat.
struct NullSample {
  Eigen::VectorXd draws;
  std::uint64_t seed = 0;
};

// Simulates sum_i lambda_i (W_i^2 - 1) + c_hat with W ~ N(0, Sigma), using a
// symmetric square root of Sigma. Draws are produced in fixed-size chunks
// with per-chunk substreams, so the result is bit-identical for any thread
// count.
NullSample sample_null(const SpectralModel& model, const WCovariance& sigma, int n_draws,
                       std::uint64_t seed, int threads = 1);

// Left-tail add-one Monte Carlo p-value: (1 + #{draws <= statistic}) / (N+1).
double p_value(double statistic, const NullSample& sample);

// Order-statistic quantile with lower interpolation (conservative for a
// left-tail test): the ceil(q*N)-th smallest draw.
double quantile(const NullSample& sample, double q);

struct TestConfig {
  double alpha = 0.05;
  int mc_samples = 20000;
  int min_mc_samples = 1000;  // floor below which no p-value is reported
  HacKernel kernel = HacKernel::Bartlett;
  double bandwidth = 0.0;  // 0 = automatic ceil(n^(1/3))
  bool demean = true;
  std::uint64_t seed = 42;
  int threads = 1;
  bool keep_draws = false;
};

struct TestDiagnostics {
  std::int64_t series_length = 0;
  std::int64_t n = 0;  // number of windows
  int d = 0;
  std::string partition;
  int num_groups = 0;
  std::string kernel;
  double bandwidth = 0.0;
  bool demeaned = true;
  double min_eig_raw = 0.0;
  int mc_samples = 0;
  std::uint64_t seed = 0;
  double s_nd = 0.0;     // symbolic correlation integral
  double u_stat = 0.0;   // U_n^d
};

struct TestReport {
  double statistic = 0.0;  // n * D2_hat
  double d2 = 0.0;
  double p_value = 0.0;
  double alpha = 0.0;
  bool reject = false;
  double c_hat = 0.0;
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd p_hat;        // per-pattern group means
  Eigen::VectorXd group_probs;  // total group masses
  double null_mean = 0.0;
  double null_var = 0.0;
  TestDiagnostics diagnostics;
  Eigen::VectorXd null_draws;  // populated only when config.keep_draws
  Eigen::MatrixXd eigenvectors;  // d! x t, for verbose reports
};

// Full pipeline: counts -> D2_hat -> spectral model -> Omega_hat -> Sigma_hat
// -> null sample -> p-value and decision. Errors carry the failing stage.
TestReport run_test(Eigen::Ref<const Eigen::VectorXd> series, int d, const Partition& partition,
                    const TestConfig& config = {});

}  // namespace ordsym
