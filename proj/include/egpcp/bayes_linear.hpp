#pragma once

#include <Eigen/Dense>

#include <iosfwd>

namespace egpcp {

struct Prediction {
  double mean = 0.0;
  double var = 0.0;
};

// Gaussian belief over the 2D-dimensional random-feature weight vector.
// The covariance is kept exactly symmetric; updates only shrink it.
struct Posterior {
  Eigen::VectorXd mean;        // 2D
  Eigen::MatrixXd covariance;  // 2D x 2D, symmetric positive definite
  double prior_var = 1.0;
  double noise_var = 0.01;

  int dim() const { return static_cast<int>(mean.size()); }
};

Posterior init_posterior(int num_frequencies, double prior_var, double noise_var);

// Predictive distribution of the noisy observation at feature phi:
// mean = phi.theta_hat, var = phi' Sigma phi + noise_var.
Prediction predict(const Posterior& post, const Eigen::VectorXd& phi);

// Rank-one conjugate-Gaussian update, O(D^2), no matrix inversion:
//   g = Sigma phi, c = noise_var + phi'g,
//   mean += g (y - phi'mean)/c, Sigma -= g g'/c (kept symmetric).
void update(Posterior& post, const Eigen::VectorXd& phi, double y);

// Log-density of N(y; mean, var).
double log_predictive(double mean, double var, double y);

// Flat binary checkpoint: magic, 2D, prior_var, noise_var, mean, row-major
// covariance. Layout documented in the README.
void save_posterior(const Posterior& post, std::ostream& out);
Posterior load_posterior(std::istream& in);

namespace detail {
// Shared core of update(): applies the rank-one formula given the
// precomputed gain g = Sigma phi and quad = phi'g.
void rank_one_update(Posterior& post, const Eigen::VectorXd& g, double quad,
                     double innovation);
}  // namespace detail

}  // namespace egpcp
