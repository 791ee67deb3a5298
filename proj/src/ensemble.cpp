#include "egpcp/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace egpcp {

FusedPrediction fuse_moments(const Eigen::VectorXd& weights,
                             const Eigen::VectorXd& means,
                             const Eigen::VectorXd& vars) {
  const auto m = weights.size();
  if (m < 1 || means.size() != m || vars.size() != m) {
    throw std::invalid_argument("fuse_moments: inconsistent member counts");
  }
  FusedPrediction fused;
  fused.weights = weights;
  fused.member_means = means;
  fused.member_vars = vars;
  fused.mean = weights.dot(means);
  double var = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double dev = means(i) - fused.mean;
    var += weights(i) * (vars(i) + dev * dev);
  }
  fused.var = var;
  return fused;
}

Eigen::VectorXd update_log_weights(const Eigen::VectorXd& log_weights,
                                   const Eigen::VectorXd& log_likelihoods) {
  if (log_weights.size() != log_likelihoods.size() || log_weights.size() < 1) {
    throw std::invalid_argument("update_log_weights: size mismatch");
  }
  Eigen::VectorXd lw = log_weights + log_likelihoods;
  const double mx = lw.maxCoeff();
  lw.array() -= mx + std::log((lw.array() - mx).exp().sum());
  // floor and renormalize in probability domain
  Eigen::VectorXd w = lw.array().exp().cwiseMax(kWeightFloor);
  w /= w.sum();
  return w.array().log();
}

Ensemble::Ensemble(const Graph& graph, const Propagation& prop,
                   std::vector<KernelSpec> specs, std::uint64_t base_seed,
                   double prior_var, double noise_var) {
  if (specs.empty()) throw std::invalid_argument("Ensemble: member spec list is empty");
  graph.validate();
  if (prop.n_nodes() != graph.n_nodes()) {
    throw std::invalid_argument("Ensemble: propagation size != graph size");
  }
  members_.reserve(specs.size());
  for (std::size_t m = 0; m < specs.size(); ++m) {
    KernelSpec spec = specs[m];
    spec.input_dim = graph.n_features();
    spec.validate();
    Member member;
    member.spec = spec;
    member.draw = sample_frequencies(spec, base_seed + m);
    member.transformed_features =
        transform_features(feature_map_matrix(graph.features, member.draw), prop);
    member.posterior = init_posterior(spec.num_frequencies, prior_var, noise_var);
    members_.push_back(std::move(member));
  }
  const auto M = static_cast<Eigen::Index>(members_.size());
  log_weights_ = Eigen::VectorXd::Constant(M, -std::log(static_cast<double>(M)));
}

int Ensemble::n_nodes() const {
  return static_cast<int>(members_.front().transformed_features.cols());
}

Eigen::VectorXd Ensemble::weights() const { return log_weights_.array().exp(); }

FusedPrediction Ensemble::predict_fused(int node) const {
  if (node < 0 || node >= n_nodes()) {
    throw std::invalid_argument("predict_fused: node index out of range");
  }
  const auto M = static_cast<Eigen::Index>(members_.size());
  Eigen::VectorXd means(M), vars(M);
  for (Eigen::Index m = 0; m < M; ++m) {
    const Prediction p =
        predict(members_[m].posterior, members_[m].transformed_features.col(node));
    means(m) = p.mean;
    vars(m) = p.var;
  }
  return fuse_moments(weights(), means, vars);
}

void Ensemble::observe(int node, double y) {
  if (node < 0 || node >= n_nodes()) {
    throw std::invalid_argument("observe: node index out of range");
  }
  if (!std::isfinite(y)) throw std::invalid_argument("observe: non-finite label");

  const auto M = static_cast<Eigen::Index>(members_.size());
  Eigen::VectorXd log_liks(M);
  for (Eigen::Index m = 0; m < M; ++m) {
    Posterior& post = members_[m].posterior;
    const Eigen::VectorXd phi = members_[m].transformed_features.col(node);
    const Eigen::VectorXd g = post.covariance.selfadjointView<Eigen::Lower>() * phi;
    double quad = phi.dot(g);
    if (quad < 0.0) quad = 0.0;
    const double mean = phi.dot(post.mean);
    // prequential: likelihood under the pre-update posterior
    log_liks(m) = log_predictive(mean, quad + post.noise_var, y);
    detail::rank_one_update(post, g, quad, y - mean);
  }
  log_weights_ = update_log_weights(log_weights_, log_liks);
}

Ensemble init_ensemble(const Graph& graph, const Propagation& prop,
                       std::vector<KernelSpec> specs, int num_frequencies,
                       std::uint64_t base_seed, double prior_var,
                       double noise_var) {
  for (KernelSpec& spec : specs) spec.num_frequencies = num_frequencies;
  return Ensemble(graph, prop, std::move(specs), base_seed, prior_var, noise_var);
}

}  // namespace egpcp
