#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ordsym/nulldist.hpp"

namespace ordsym {

enum class ProcessFamily { Iid, Ar1, Ma1 };
enum class Innovation { Gaussian, LognormalCentered, Chi2One, ExpOne, StudentT, Cauchy };
enum class Marginal { None, Pareto, Laplace, Logistic, Cauchy, Gaussian };

// Optional monotone marginal transform g(y) = F^{-1}(Phi((y - mu)/sigma))
// applied to a Gaussian base process. Parameters (a, b) are per family:
// pareto(x_m, alpha), laplace(mu, b), logistic(mu, s), cauchy(mu, gamma).
struct Subordination {
  Marginal marginal = Marginal::None;
  double a = 0.0;
  double b = 1.0;
};

struct ProcessSpec {
  ProcessFamily family = ProcessFamily::Iid;
  double theta = 0.0;
  Innovation innovation = Innovation::Gaussian;
  int t_dof = 1;  // degrees of freedom when innovation == StudentT
  Subordination subordination;
  int burn_in = 1000;  // AR(1) transient removal
};

// Grammar: `ma1(theta=0.5,innov=gaussian)`, `iid()`,
// `ar1(theta=0.5)|subordinate(pareto(1,2))`; innovations: gaussian,
// lognormal, chi2_1, exp_1, student_t(nu), cauchy.
ProcessSpec parse_process_spec(std::string_view text);
std::string to_string(const ProcessSpec& spec);

// Deterministic given the seed. AR(1) starts from a burn-in surrogate of the
// stationary law; subordination (if any) is applied with the analytic mean
// and standard deviation of the Gaussian base process.
Eigen::VectorXd generate(const ProcessSpec& spec, std::int64_t n, std::uint64_t seed);

// Standard deviation of the base linear process: AR(1) 1/sqrt(1-theta^2),
// MA(1) sqrt(1+theta^2), iid 1. Only defined for Gaussian innovations when a
// subordination is requested.
double gaussian_process_sd(const ProcessSpec& spec);

Eigen::VectorXd subordinate(Eigen::Ref<const Eigen::VectorXd> gaussian_series,
                            const Subordination& marginal, double mu, double sigma);

struct PowerResult {
  double rejection_rate = 0.0;
  Eigen::VectorXd p_values;
  Eigen::VectorXd statistics;
};

// Runs the full test on `replicates` independent series (per-replicate
// substreams) and reports the fraction rejected at config.alpha.
PowerResult power_experiment(const ProcessSpec& spec, const Partition& partition, std::int64_t n,
                             int replicates, const TestConfig& config, std::uint64_t seed);

}  // namespace ordsym
