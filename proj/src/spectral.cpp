#include "ordsym/spectral.hpp"

#include <cmath>

namespace ordsym {

namespace {

SpectralModel assemble(const Partition& partition, const Eigen::VectorXd& group_probs,
                       double match_probability) {
  const int m = partition.num_groups();
  const auto n_patterns = partition.num_patterns();
  SpectralModel model;
  model.t = partition.spectral_dim();
  model.eigenvalues = Eigen::VectorXd::Zero(model.t);
  model.eigenvectors = Eigen::MatrixXd::Zero(n_patterns, model.t);
  model.p_hat = Eigen::VectorXd::Zero(m);

  double c = 0.0;
  int col = 0;
  for (int g = 0; g < m; ++g) {
    const auto& members = partition.group(g);
    const int size = partition.group_size(g);
    const double p_i = group_probs[g] / size;
    model.p_hat[g] = p_i;
    c += group_probs[g] / size;
    if (size == 1) continue;
    if (p_i <= 0.0)
      throw ZeroGroupProbability(
          "group " + std::to_string(g + 1) + " (" + std::to_string(size) +
          " patterns) has zero observed probability; the eigenvector scale 1/sqrt(p) is "
          "undefined. Increase the sample or merge groups.");
    for (int j = 1; j < size; ++j, ++col) {
      model.eigenvalues[col] = -p_i;
      const double scale = 1.0 / std::sqrt(p_i * j * (j + 1));
      for (int k = 0; k < j; ++k)
        model.eigenvectors(members[static_cast<std::size_t>(k)], col) = scale;
      model.eigenvectors(members[static_cast<std::size_t>(j)], col) = -j * scale;
    }
  }
  model.c_hat = c - match_probability;
  return model;
}

}  // namespace

SpectralModel build_spectral_model(const Partition& partition, const PatternCounts& counts) {
  const GroupedFrequencies freq = grouped_frequencies(counts, partition);
  return assemble(partition, freq.group_probs, symbolic_correlation(counts));
}

SpectralModel spectral_model_from_probs(const Partition& partition,
                                        Eigen::Ref<const Eigen::VectorXd> probabilities) {
  if (probabilities.size() != partition.num_patterns())
    throw DimensionMismatch("probability vector size mismatch");
  detail::check_probability_vector(probabilities);
  Eigen::VectorXd group_probs = Eigen::VectorXd::Zero(partition.num_groups());
  for (int g = 0; g < partition.num_groups(); ++g)
    for (PatternId id : partition.group(g)) group_probs[g] += probabilities[id];
  return assemble(partition, group_probs, probabilities.squaredNorm());
}

Eigen::MatrixXd operator_matrix(const Partition& partition,
                                Eigen::Ref<const Eigen::VectorXd> probabilities) {
  if (probabilities.size() != partition.num_patterns())
    throw DimensionMismatch("probability vector size mismatch");
  detail::check_probability_vector(probabilities);
  const auto n_patterns = partition.num_patterns();
  Eigen::MatrixXd op(n_patterns, n_patterns);
  for (PatternId u = 0; u < n_patterns; ++u)
    for (PatternId v = 0; v < n_patterns; ++v)
      op(u, v) = kernel_h(u, v, partition) * probabilities[v];
  return op;
}

}  // namespace ordsym
