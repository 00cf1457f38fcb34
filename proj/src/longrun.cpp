#include "ordsym/longrun.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace ordsym {

HacKernel hac_kernel_by_name(std::string_view name) {
  if (name == "bartlett") return HacKernel::Bartlett;
  if (name == "parzen") return HacKernel::Parzen;
  if (name == "qs" || name == "quadratic-spectral") return HacKernel::QuadraticSpectral;
  throw UnknownKernel("unknown kernel '" + std::string(name) +
                      "' (expected bartlett, parzen or qs)");
}

std::string to_string(HacKernel kernel) {
  switch (kernel) {
    case HacKernel::Bartlett: return "bartlett";
    case HacKernel::Parzen: return "parzen";
    case HacKernel::QuadraticSpectral: return "qs";
  }
  return "?";
}

double hac_weight(HacKernel kernel, double x) {
  const double a = std::abs(x);
  switch (kernel) {
    case HacKernel::Bartlett:
      return a < 1.0 ? 1.0 - a : 0.0;
    case HacKernel::Parzen:
      if (a <= 0.5) return 1.0 - 6.0 * a * a + 6.0 * a * a * a;
      if (a <= 1.0) return 2.0 * (1.0 - a) * (1.0 - a) * (1.0 - a);
      return 0.0;
    case HacKernel::QuadraticSpectral: {
      if (a < 1e-12) return 1.0;
      const double z = 6.0 * std::numbers::pi * x / 5.0;
      return 25.0 / (12.0 * std::numbers::pi * std::numbers::pi * x * x) *
             (std::sin(z) / z - std::cos(z));
    }
  }
  return 0.0;
}

double hac_weight(std::string_view kernel_name, double x) {
  return hac_weight(hac_kernel_by_name(kernel_name), x);
}

double default_bandwidth(std::int64_t n) {
  return std::ceil(std::cbrt(static_cast<double>(n)) - 1e-9);
}

namespace {

// Largest lag with non-negligible kernel weight. The quadratic spectral
// window oscillates, so its cutoff uses the 1/x^2 envelope rather than the
// first small value.
std::int64_t max_lag(HacKernel kernel, double bandwidth, std::int64_t n) {
  if (kernel != HacKernel::QuadraticSpectral) {
    const auto support = static_cast<std::int64_t>(std::ceil(bandwidth)) - 1;
    return std::min(support, n - 1);
  }
  const double envelope_x = 6.5e5;  // 50 / (12 pi^2 x^2) < 1e-12 beyond this
  const double lags = std::ceil(envelope_x * bandwidth);
  if (lags >= static_cast<double>(n)) return n - 1;
  return static_cast<std::int64_t>(lags);
}

}  // namespace

LongRunCovariance estimate_omega(const std::vector<PatternId>& ids, int d, HacKernel kernel,
                                 double bandwidth, bool demean) {
  detail::check_order(d);
  const auto n = static_cast<std::int64_t>(ids.size());
  if (n < 2) throw TooFewWindows("need at least 2 windows");
  if (bandwidth < 1.0)
    throw BandwidthTooSmall("bandwidth " + std::to_string(bandwidth) + " < 1");
  const auto dim = factorial(d);

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(dim);
  for (PatternId id : ids) mean[id] += 1.0;
  mean /= static_cast<double>(n);

  const std::int64_t top = max_lag(kernel, bandwidth, n);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);

  // Lag 0: counts on the diagonal.
  {
    Eigen::MatrixXd c0 = Eigen::MatrixXd::Zero(dim, dim);
    for (PatternId id : ids) c0(id, id) += 1.0;
    if (demean) {
      const Eigen::VectorXd total = mean * static_cast<double>(n);
      c0 -= total * mean.transpose();
      c0 -= mean * total.transpose();
      c0 += static_cast<double>(n) * mean * mean.transpose();
    }
    acc += c0;  // k(0) = 1
  }

  // head/tail pattern counts for the running lag, updated incrementally.
  Eigen::VectorXd head = mean * static_cast<double>(n);
  Eigen::VectorXd tail = head;
  Eigen::MatrixXd cross(dim, dim);
  for (std::int64_t lag = 1; lag <= top; ++lag) {
    head[ids[static_cast<std::size_t>(n - lag)]] -= 1.0;
    tail[ids[static_cast<std::size_t>(lag - 1)]] -= 1.0;
    const double w = hac_weight(kernel, static_cast<double>(lag) / bandwidth);
    if (std::abs(w) < 1e-12) continue;
    cross.setZero();
    for (std::int64_t t = 0; t + lag < n; ++t)
      cross(ids[static_cast<std::size_t>(t)], ids[static_cast<std::size_t>(t + lag)]) += 1.0;
    if (demean) {
      cross -= head * mean.transpose();
      cross -= mean * tail.transpose();
      cross += static_cast<double>(n - lag) * mean * mean.transpose();
    }
    acc += w * (cross + cross.transpose());
  }

  LongRunCovariance out;
  out.omega = acc / static_cast<double>(n);
  out.kernel = kernel;
  out.bandwidth = bandwidth;
  out.n = n;
  out.demeaned = demean;
  return out;
}

LongRunCovariance estimate_omega(Eigen::Ref<const Eigen::VectorXd> series, int d,
                                 HacKernel kernel, double bandwidth, bool demean) {
  return estimate_omega(pattern_sequence(series, d), d, kernel, bandwidth, demean);
}

WCovariance w_covariance(const LongRunCovariance& omega, const SpectralModel& model) {
  if (omega.omega.rows() != model.eigenvectors.rows())
    throw DimensionMismatch("omega is " + std::to_string(omega.omega.rows()) +
                            "-dimensional, eigenvectors have " +
                            std::to_string(model.eigenvectors.rows()) + " coordinates");
  Eigen::MatrixXd sigma = model.eigenvectors.transpose() * omega.omega * model.eigenvectors;
  sigma = ((sigma + sigma.transpose()) / 2.0).eval();

  WCovariance out;
  if (sigma.rows() == 0) {
    out.sigma = sigma;
    out.min_eig_raw = 0.0;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sigma);
  out.min_eig_raw = solver.eigenvalues().minCoeff();
  const Eigen::VectorXd clipped = solver.eigenvalues().cwiseMax(0.0);
  out.sigma = solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().transpose();
  out.sigma = ((out.sigma + out.sigma.transpose()) / 2.0).eval();
  return out;
}

}  // namespace ordsym
