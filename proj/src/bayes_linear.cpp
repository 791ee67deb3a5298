#include "egpcp/bayes_linear.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace egpcp {

namespace {
constexpr char kMagic[8] = {'E', 'G', 'P', 'P', 'O', 'S', 'T', '1'};
}

Posterior init_posterior(int num_frequencies, double prior_var, double noise_var) {
  if (num_frequencies < 1) {
    throw std::invalid_argument("init_posterior: num_frequencies must be >= 1");
  }
  if (!(prior_var > 0.0)) throw std::invalid_argument("init_posterior: prior_var must be > 0");
  if (!(noise_var > 0.0)) throw std::invalid_argument("init_posterior: noise_var must be > 0");
  Posterior post;
  const int dim = 2 * num_frequencies;
  post.mean = Eigen::VectorXd::Zero(dim);
  post.covariance = prior_var * Eigen::MatrixXd::Identity(dim, dim);
  post.prior_var = prior_var;
  post.noise_var = noise_var;
  return post;
}

Prediction predict(const Posterior& post, const Eigen::VectorXd& phi) {
  if (phi.size() != post.mean.size()) {
    throw std::invalid_argument("predict: feature dimension mismatch");
  }
  const Eigen::VectorXd g = post.covariance.selfadjointView<Eigen::Lower>() * phi;
  double quad = phi.dot(g);
  if (quad < 0.0) quad = 0.0;  // roundoff guard
  return {phi.dot(post.mean), quad + post.noise_var};
}

namespace detail {

void rank_one_update(Posterior& post, const Eigen::VectorXd& g, double quad,
                     double innovation) {
  const double c = post.noise_var + quad;
  post.mean += g * (innovation / c);
  post.covariance.selfadjointView<Eigen::Lower>().rankUpdate(g, -1.0 / c);
  // keep the stored matrix exactly symmetric
  post.covariance.triangularView<Eigen::StrictlyUpper>() =
      post.covariance.transpose();
}

}  // namespace detail

void update(Posterior& post, const Eigen::VectorXd& phi, double y) {
  if (phi.size() != post.mean.size()) {
    throw std::invalid_argument("update: feature dimension mismatch");
  }
  if (!std::isfinite(y)) throw std::invalid_argument("update: non-finite label");
  const Eigen::VectorXd g = post.covariance.selfadjointView<Eigen::Lower>() * phi;
  double quad = phi.dot(g);
  if (quad < 0.0) quad = 0.0;
  detail::rank_one_update(post, g, quad, y - phi.dot(post.mean));
}

double log_predictive(double mean, double var, double y) {
  if (!(var > 0.0)) throw std::invalid_argument("log_predictive: var must be > 0");
  const double diff = y - mean;
  return -0.5 * std::log(2.0 * std::numbers::pi * var) - diff * diff / (2.0 * var);
}

void save_posterior(const Posterior& post, std::ostream& out) {
  const std::int64_t dim = post.mean.size();
  out.write(kMagic, sizeof(kMagic));
  out.write(reinterpret_cast<const char*>(&dim), sizeof(dim));
  out.write(reinterpret_cast<const char*>(&post.prior_var), sizeof(double));
  out.write(reinterpret_cast<const char*>(&post.noise_var), sizeof(double));
  out.write(reinterpret_cast<const char*>(post.mean.data()),
            static_cast<std::streamsize>(dim * sizeof(double)));
  // row-major covariance
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j < dim; ++j) {
      const double v = post.covariance(i, j);
      out.write(reinterpret_cast<const char*>(&v), sizeof(double));
    }
  }
  if (!out) throw std::runtime_error("save_posterior: write failed");
}

Posterior load_posterior(std::istream& in) {
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw std::runtime_error("load_posterior: bad magic");
  }
  std::int64_t dim = 0;
  Posterior post;
  in.read(reinterpret_cast<char*>(&dim), sizeof(dim));
  in.read(reinterpret_cast<char*>(&post.prior_var), sizeof(double));
  in.read(reinterpret_cast<char*>(&post.noise_var), sizeof(double));
  if (!in || dim < 2 || dim % 2 != 0) {
    throw std::runtime_error("load_posterior: corrupt header");
  }
  post.mean.resize(dim);
  in.read(reinterpret_cast<char*>(post.mean.data()),
          static_cast<std::streamsize>(dim * sizeof(double)));
  post.covariance.resize(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j < dim; ++j) {
      double v = 0.0;
      in.read(reinterpret_cast<char*>(&v), sizeof(double));
      post.covariance(i, j) = v;
    }
  }
  if (!in) throw std::runtime_error("load_posterior: truncated record");
  return post;
}

}  // namespace egpcp
