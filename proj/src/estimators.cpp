#include "ordsym/estimators.hpp"

#include <cmath>

namespace ordsym {

namespace detail {

void check_probability_vector(Eigen::Ref<const Eigen::VectorXd> p, double tol) {
  if ((p.array() < 0.0).any())
    throw NotAProbabilityVector("negative entry in probability vector");
  const double sum = p.sum();
  if (std::abs(sum - 1.0) > tol)
    throw NotAProbabilityVector("probabilities sum to " + std::to_string(sum));
}

}  // namespace detail

PatternCounts count_pattern_ids(const std::vector<PatternId>& ids, int d) {
  detail::check_order(d);
  if (ids.empty()) throw SeriesTooShort("no windows");
  PatternCounts out;
  out.d = d;
  out.n = static_cast<std::int64_t>(ids.size());
  out.counts = Eigen::VectorXd::Zero(factorial(d));
  for (PatternId id : ids) out.counts[id] += 1.0;
  return out;
}

PatternCounts count_patterns(Eigen::Ref<const Eigen::VectorXd> series, int d) {
  return count_pattern_ids(pattern_sequence(series, d), d);
}

GroupedFrequencies grouped_frequencies(const PatternCounts& counts, const Partition& partition) {
  if (counts.d != partition.order())
    throw DimensionMismatch("counts built for d=" + std::to_string(counts.d) +
                            ", partition for d=" + std::to_string(partition.order()));
  const double n = static_cast<double>(counts.n);
  GroupedFrequencies out;
  out.group_probs = Eigen::VectorXd::Zero(partition.num_groups());
  out.symmetrized = Eigen::VectorXd::Zero(partition.num_patterns());
  for (int g = 0; g < partition.num_groups(); ++g) {
    double mass = 0.0;
    for (PatternId id : partition.group(g)) mass += counts.counts[id];
    out.group_probs[g] = mass / n;
    const double per_pattern = out.group_probs[g] / partition.group_size(g);
    for (PatternId id : partition.group(g)) out.symmetrized[id] = per_pattern;
  }
  return out;
}

double symbolic_correlation(const PatternCounts& counts) {
  if (counts.n < 2) throw TooFewWindows("need at least 2 windows, have " + std::to_string(counts.n));
  const double n = static_cast<double>(counts.n);
  const double pairs = (counts.counts.array() * (counts.counts.array() - 1.0)).sum();
  return pairs / (n * (n - 1.0));
}

double d2_statistic(const PatternCounts& counts, const Partition& partition) {
  const GroupedFrequencies freq = grouped_frequencies(counts, partition);
  return freq.symmetrized.squaredNorm() - symbolic_correlation(counts);
}

double kernel_h(PatternId x, PatternId y, const Partition& partition) {
  const int gx = partition.group_of(x);
  const int gy = partition.group_of(y);
  double value = 0.0;
  if (gx == gy) value += 1.0 / partition.group_size(gx);
  if (x == y) value -= 1.0;
  return value;
}

double u_statistic(const PatternCounts& counts, const Partition& partition) {
  if (counts.d != partition.order())
    throw DimensionMismatch("counts/partition order mismatch");
  if (counts.n < 2) throw TooFewWindows("need at least 2 windows, have " + std::to_string(counts.n));
  const double n = static_cast<double>(counts.n);
  // sum_{k1 != k2} h = sum_G (N_G^2 - N_G)/|G| - sum_pi N_pi (N_pi - 1)
  double group_part = 0.0;
  for (int g = 0; g < partition.num_groups(); ++g) {
    double ng = 0.0;
    for (PatternId id : partition.group(g)) ng += counts.counts[id];
    group_part += (ng * ng - ng) / partition.group_size(g);
  }
  const double diag_part = (counts.counts.array() * (counts.counts.array() - 1.0)).sum();
  return (group_part - diag_part) / (n * n);
}

double theta(Eigen::Ref<const Eigen::VectorXd> probabilities, const Partition& partition) {
  if (probabilities.size() != partition.num_patterns())
    throw DimensionMismatch("probability vector has " + std::to_string(probabilities.size()) +
                            " entries, expected " + std::to_string(partition.num_patterns()));
  detail::check_probability_vector(probabilities);
  double grouped = 0.0;
  for (int g = 0; g < partition.num_groups(); ++g) {
    double mass = 0.0;
    for (PatternId id : partition.group(g)) mass += probabilities[id];
    grouped += mass * mass / partition.group_size(g);
  }
  return grouped - probabilities.squaredNorm();
}

}  // namespace ordsym
