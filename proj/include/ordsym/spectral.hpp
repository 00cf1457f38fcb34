#pragma once

#include "ordsym/estimators.hpp"

namespace ordsym {

// Ingredients of the limiting law of n * D2_hat under symmetry: the nonzero
// spectrum of the kernel's integral operator restricted to pattern-indicator
// step functions, plus the plug-in centering constant.
struct SpectralModel {
  int t = 0;                     // d! - m
  Eigen::VectorXd eigenvalues;   // t entries, grouped by block, all <= 0
  Eigen::MatrixXd eigenvectors;  // d! x t; column i is g^(i) in pattern-id coordinates
  Eigen::VectorXd p_hat;         // m group means p_hat(G_i)/|G_i|
  double c_hat = 0.0;
};

// Plug-in model from observed counts. Group i of size s contributes s-1
// eigenvectors with eigenvalue -p_hat_i; the j-th basis vector in block
// coordinates is (e_1 + ... + e_j - j e_{j+1}) / sqrt(p_hat_i j (j+1)).
// c_hat = sum_G p_hat(G)/|G| - S_n^d.
// Throws ZeroGroupProbability when a multi-member group was never observed.
SpectralModel build_spectral_model(const Partition& partition, const PatternCounts& counts);

// Same construction from a probability vector (c uses sum p^2 in place of
// the unbiased S_n^d). Used for population-level checks.
SpectralModel spectral_model_from_probs(const Partition& partition,
                                        Eigen::Ref<const Eigen::VectorXd> probabilities);

// M[u, v] = h(u, v) p(v): the operator restricted to step functions, in
// pattern-id coordinates. Serves as an eigen-equation oracle.
Eigen::MatrixXd operator_matrix(const Partition& partition,
                                Eigen::Ref<const Eigen::VectorXd> probabilities);

}  // namespace ordsym
