#pragma once

#include "egpcp/bayes_linear.hpp"
#include "egpcp/graph.hpp"
#include "egpcp/kernels.hpp"

#include <cstdint>
#include <vector>

namespace egpcp {

// Weights below this are floored (then renormalized) so a member written off
// by the data can still recover after a regime shift.
inline constexpr double kWeightFloor = 1e-12;

struct Member {
  KernelSpec spec;
  FrequencyDraw draw;
  Posterior posterior;
  Eigen::MatrixXd transformed_features;  // 2D x N, member-specific Phi P^T
};

struct FusedPrediction {
  double mean = 0.0;
  double var = 0.0;
  Eigen::VectorXd member_means;
  Eigen::VectorXd member_vars;
  Eigen::VectorXd weights;
};

// Moment-matched single Gaussian of the mixture sum_m w_m N(mu_m, var_m):
// mean = sum w mu, var = sum w [var + (mu - mean)^2].
FusedPrediction fuse_moments(const Eigen::VectorXd& weights,
                             const Eigen::VectorXd& means,
                             const Eigen::VectorXd& vars);

// Bayes-rule reweighting in the log domain: log w + log p, log-sum-exp
// normalized, floored at kWeightFloor and renormalized.
Eigen::VectorXd update_log_weights(const Eigen::VectorXd& log_weights,
                                   const Eigen::VectorXd& log_likelihoods);

// M graph-RF GP members with adaptive weights. Member m draws frequencies
// with seed base_seed + m and precomputes its transformed feature matrix for
// all nodes at construction.
class Ensemble {
 public:
  Ensemble(const Graph& graph, const Propagation& prop,
           std::vector<KernelSpec> specs, std::uint64_t base_seed,
           double prior_var, double noise_var);

  FusedPrediction predict_fused(int node) const;

  // Reveal the label of a node: reweight members by their pre-update
  // predictive likelihood, then update every posterior. O(M D^2).
  void observe(int node, double y);

  int n_members() const { return static_cast<int>(members_.size()); }
  int n_nodes() const;
  Eigen::VectorXd weights() const;  // exp(log weights), sums to 1
  const std::vector<Member>& members() const { return members_; }

 private:
  std::vector<Member> members_;
  Eigen::VectorXd log_weights_;
};

Ensemble init_ensemble(const Graph& graph, const Propagation& prop,
                       std::vector<KernelSpec> specs, int num_frequencies,
                       std::uint64_t base_seed, double prior_var,
                       double noise_var);

}  // namespace egpcp
