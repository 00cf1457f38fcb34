#include "ordsym/nulldist.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "ordsym/rng.hpp"

namespace ordsym {

namespace {

constexpr int kChunk = 1024;  // draws per RNG substream

template <typename Stage>
auto run_stage(const char* name, Stage&& stage) -> decltype(stage()) {
  try {
    return stage();
  } catch (Error& e) {
    e.set_stage(name);
    throw;
  }
}

}  // namespace

NullSample sample_null(const SpectralModel& model, const WCovariance& sigma, int n_draws,
                       std::uint64_t seed, int threads) {
  if (model.t == 0)
    throw DegenerateModel("t = 0 (singleton-only partition); the null law is degenerate");
  if (n_draws < 1) throw EmptySample("requested " + std::to_string(n_draws) + " draws");
  if (sigma.sigma.rows() != model.t || sigma.sigma.cols() != model.t)
    throw DimensionMismatch("sigma is not t x t");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sigma.sigma);
  if (solver.eigenvalues().minCoeff() < -1e-10)
    throw NotPSD("covariance has eigenvalue " + std::to_string(solver.eigenvalues().minCoeff()));
  const Eigen::MatrixXd root = solver.eigenvectors() *
                               solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                               solver.eigenvectors().transpose();

  NullSample sample;
  sample.seed = seed;
  sample.draws.resize(n_draws);
  const int t = model.t;
  const Eigen::VectorXd& lambda = model.eigenvalues;
  const double shift = model.c_hat - lambda.sum();

  const int n_chunks = (n_draws + kChunk - 1) / kChunk;
  std::atomic<int> next_chunk{0};
  auto worker = [&] {
    Eigen::VectorXd z(t), w(t);
    for (;;) {
      const int chunk = next_chunk.fetch_add(1);
      if (chunk >= n_chunks) return;
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(chunk)));
      const int begin = chunk * kChunk;
      const int end = std::min(n_draws, begin + kChunk);
      for (int k = begin; k < end; ++k) {
        for (int i = 0; i < t; ++i) z[i] = rng.normal();
        w.noalias() = root * z;
        sample.draws[k] = lambda.dot(w.cwiseAbs2()) + shift;
      }
    }
  };

  const int n_workers = std::max(1, std::min(threads, n_chunks));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return sample;
}

double p_value(double statistic, const NullSample& sample) {
  const auto n = sample.draws.size();
  if (n == 0) throw EmptySample("null sample is empty");
  const auto below = (sample.draws.array() <= statistic).count();
  return (1.0 + static_cast<double>(below)) / (static_cast<double>(n) + 1.0);
}

double quantile(const NullSample& sample, double q) {
  const auto n = sample.draws.size();
  if (n == 0) throw EmptySample("null sample is empty");
  if (!(q > 0.0 && q < 1.0)) throw Error("quantile level must lie in (0, 1)");
  std::vector<double> sorted(sample.draws.data(), sample.draws.data() + n);
  std::sort(sorted.begin(), sorted.end());
  auto rank = static_cast<std::int64_t>(std::ceil(q * static_cast<double>(n)));
  rank = std::max<std::int64_t>(rank, 1);
  return sorted[static_cast<std::size_t>(rank - 1)];
}

TestReport run_test(Eigen::Ref<const Eigen::VectorXd> series, int d, const Partition& partition,
                    const TestConfig& config) {
  if (series.size() < d + 1)
    throw SeriesTooShort("series length " + std::to_string(series.size()) +
                         " too short for d = " + std::to_string(d));
  if (config.mc_samples < config.min_mc_samples)
    throw EmptySample("mc_samples " + std::to_string(config.mc_samples) + " below the floor " +
                      std::to_string(config.min_mc_samples));

  const std::vector<PatternId> ids =
      run_stage("patterns", [&] { return pattern_sequence(series, d); });
  const PatternCounts counts = run_stage("counts", [&] { return count_pattern_ids(ids, d); });
  const GroupedFrequencies freq =
      run_stage("frequencies", [&] { return grouped_frequencies(counts, partition); });
  const double d2 = run_stage("statistic", [&] { return d2_statistic(counts, partition); });
  const SpectralModel model =
      run_stage("spectral model", [&] { return build_spectral_model(partition, counts); });

  const double bandwidth =
      config.bandwidth > 0.0 ? config.bandwidth : default_bandwidth(counts.n);
  const LongRunCovariance omega = run_stage("long-run covariance", [&] {
    return estimate_omega(ids, d, config.kernel, bandwidth, config.demean);
  });
  const WCovariance sigma =
      run_stage("w covariance", [&] { return w_covariance(omega, model); });
  const NullSample sample = run_stage("null sample", [&] {
    return sample_null(model, sigma, config.mc_samples, config.seed, config.threads);
  });

  TestReport report;
  report.d2 = d2;
  report.statistic = static_cast<double>(counts.n) * d2;
  report.p_value = p_value(report.statistic, sample);
  report.alpha = config.alpha;
  report.reject = report.p_value < config.alpha;
  report.c_hat = model.c_hat;
  report.eigenvalues = model.eigenvalues;
  report.p_hat = model.p_hat;
  report.group_probs = freq.group_probs;
  report.null_mean = sample.draws.mean();
  report.null_var =
      (sample.draws.array() - report.null_mean).square().sum() /
      (static_cast<double>(sample.draws.size()) - 1.0);
  report.eigenvectors = model.eigenvectors;

  report.diagnostics.series_length = series.size();
  report.diagnostics.n = counts.n;
  report.diagnostics.d = d;
  report.diagnostics.partition = partition.name();
  report.diagnostics.num_groups = partition.num_groups();
  report.diagnostics.kernel = to_string(config.kernel);
  report.diagnostics.bandwidth = bandwidth;
  report.diagnostics.demeaned = config.demean;
  report.diagnostics.min_eig_raw = sigma.min_eig_raw;
  report.diagnostics.mc_samples = config.mc_samples;
  report.diagnostics.seed = config.seed;
  report.diagnostics.s_nd = symbolic_correlation(counts);
  report.diagnostics.u_stat = u_statistic(counts, partition);
  if (config.keep_draws) report.null_draws = sample.draws;
  return report;
}

}  // namespace ordsym
