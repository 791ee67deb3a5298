#pragma once

#include "egpcp/bayes_linear.hpp"
#include "egpcp/graph.hpp"
#include "egpcp/kernels.hpp"

#include <vector>

namespace egpcp {

// Dense N x N matrix of exact kernel evaluations over the feature rows.
Eigen::MatrixXd exact_kernel_matrix(const Eigen::MatrixXd& features,
                                    const KernelSpec& spec);

// Exact graph GP predictive (no random-feature approximation), via a dense
// solve over the observed block of P K P^T. Validation oracle for the RF
// pipeline; not part of the streaming path.
class ExactGraphGP {
 public:
  ExactGraphGP(const KernelSpec& spec, const Eigen::MatrixXd& features,
               const Propagation& prop, double noise_var,
               std::vector<int> observed, Eigen::VectorXd observed_labels);

  // mean = k' (K_obs + noise I)^-1 y, var = k_tt - k' (...)^-1 k + noise.
  // The node must not be observed.
  Prediction predict(int node) const;

  const Eigen::MatrixXd& graph_kernel() const { return ktilde_; }

 private:
  Eigen::MatrixXd ktilde_;  // P K P^T, N x N
  std::vector<int> observed_;
  std::vector<char> is_observed_;
  Eigen::VectorXd labels_;
  Eigen::LDLT<Eigen::MatrixXd> solver_;  // factor of K_obs + noise I
  Eigen::VectorXd alpha_;                // (K_obs + noise I)^-1 y
  double noise_var_ = 0.0;
};

}  // namespace egpcp
