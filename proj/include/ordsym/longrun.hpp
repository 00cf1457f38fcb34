#pragma once

#include <string_view>

#include "ordsym/spectral.hpp"

namespace ordsym {

enum class HacKernel { Bartlett, Parzen, QuadraticSpectral };

HacKernel hac_kernel_by_name(std::string_view name);  // bartlett | parzen | qs
std::string to_string(HacKernel kernel);

// Lag-window weight k(x). All three satisfy k(0) = 1, symmetry and
// integrability.
double hac_weight(HacKernel kernel, double x);
double hac_weight(std::string_view kernel_name, double x);

// Default bandwidth ceil(n^(1/3)): grows without bound, o(n).
double default_bandwidth(std::int64_t n);

// Kernel-weighted long-run covariance of the scaled pattern-indicator
// process R_{n,l} = (1/sqrt(n)) 1{Pi(X_l) = .}.
struct LongRunCovariance {
  Eigen::MatrixXd omega;  // d! x d!, symmetric
  HacKernel kernel = HacKernel::Bartlett;
  double bandwidth = 0.0;
  std::int64_t n = 0;
  bool demeaned = true;
};

// Omega_hat = sum_{s,l} R_s R_l' k((l-s)/bandwidth), accumulated lag by lag
// (exact for compact-support kernels; the quadratic spectral window is
// truncated where |k| < 1e-12). When demean is set (the default) the
// indicator vectors are centered at the empirical frequency vector first,
// which removes a rank-one term that does not vanish in finite samples.
LongRunCovariance estimate_omega(const std::vector<PatternId>& ids, int d, HacKernel kernel,
                                 double bandwidth, bool demean = true);
LongRunCovariance estimate_omega(Eigen::Ref<const Eigen::VectorXd> series, int d,
                                 HacKernel kernel, double bandwidth, bool demean = true);

// Covariance of the limiting Gaussian vector W: Sigma_ij = g_i' Omega g_j,
// projected onto the PSD cone by clipping negative eigenvalues at zero.
struct WCovariance {
  Eigen::MatrixXd sigma;      // t x t, PSD
  double min_eig_raw = 0.0;   // smallest eigenvalue before projection
};

WCovariance w_covariance(const LongRunCovariance& omega, const SpectralModel& model);

}  // namespace ordsym
