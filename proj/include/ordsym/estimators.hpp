#pragma once

#include <Eigen/Core>

#include "ordsym/partition.hpp"

namespace ordsym {

// Window pattern counts N_pi over the n = len - d + 1 overlapping windows.
// Entries are integral; double storage keeps the downstream algebra in Eigen.
struct PatternCounts {
  int d = 0;
  std::int64_t n = 0;
  Eigen::VectorXd counts;  // d! entries, sum == n
};

PatternCounts count_patterns(Eigen::Ref<const Eigen::VectorXd> series, int d);
PatternCounts count_pattern_ids(const std::vector<PatternId>& ids, int d);

struct GroupedFrequencies {
  Eigen::VectorXd group_probs;  // m entries: total empirical mass of each group
  Eigen::VectorXd symmetrized;  // d! entries: p_hat(G)/|G| for the group containing pi
};

GroupedFrequencies grouped_frequencies(const PatternCounts& counts, const Partition& partition);

// Symbolic correlation integral S_n^d = sum_pi N_pi (N_pi - 1) / (n (n-1)),
// the unbiased pairwise match-probability estimator.
double symbolic_correlation(const PatternCounts& counts);

// D2_hat(G) = sum_pi p_hat_G(pi)^2 - S_n^d. Non-positive in population with
// equality exactly under symmetry; the test statistic is n * d2_statistic.
double d2_statistic(const PatternCounts& counts, const Partition& partition);

// h(x, y) = 1/|G| if x and y share group G (minus 1 on the diagonal), else 0.
double kernel_h(PatternId x, PatternId y, const Partition& partition);

// U_n^d = (1/n^2) sum_{k1 != k2} h(pattern_k1, pattern_k2), reduced to
// counts; identical to the pairwise double sum.
double u_statistic(const PatternCounts& counts, const Partition& partition);

// Population asymmetry theta = sum_G (1/|G|) P(G)^2 - sum_pi p(pi)^2.
// Zero iff p is constant within every group; negative otherwise.
double theta(Eigen::Ref<const Eigen::VectorXd> probabilities, const Partition& partition);

namespace detail {
void check_probability_vector(Eigen::Ref<const Eigen::VectorXd> p, double tol = 1e-9);
}

}  // namespace ordsym
