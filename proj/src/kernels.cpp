#include "egpcp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace egpcp {

void KernelSpec::validate() const {
  if (!(lengthscale > 0.0)) throw std::invalid_argument("KernelSpec: lengthscale must be > 0");
  if (num_frequencies < 1) throw std::invalid_argument("KernelSpec: num_frequencies must be >= 1");
  if (input_dim < 1) throw std::invalid_argument("KernelSpec: input_dim must be >= 1");
  if (family == KernelFamily::Matern && !(smoothness > 0.0)) {
    throw std::invalid_argument("KernelSpec: Matern smoothness must be > 0");
  }
}

std::string kernel_name(const KernelSpec& spec) {
  if (spec.family == KernelFamily::RBF) return "RBF";
  std::ostringstream out;
  out << "Matern-" << spec.smoothness;
  return out.str();
}

FrequencyDraw sample_frequencies(const KernelSpec& spec, std::uint64_t seed) {
  spec.validate();
  const int D = spec.num_frequencies;
  const int d = spec.input_dim;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  FrequencyDraw draw;
  draw.seed = seed;
  draw.frequencies.resize(D, d);

  if (spec.family == KernelFamily::RBF) {
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < d; ++j) {
        draw.frequencies(i, j) = gauss(rng) / spec.lengthscale;
      }
    }
  } else {
    // Multivariate-t spectral density with 2*nu degrees of freedom.
    std::chi_squared_distribution<double> chi2(2.0 * spec.smoothness);
    for (int i = 0; i < D; ++i) {
      for (int j = 0; j < d; ++j) {
        draw.frequencies(i, j) = gauss(rng);
      }
      const double u = chi2(rng);
      draw.frequencies.row(i) *=
          std::sqrt(2.0 * spec.smoothness / u) / spec.lengthscale;
    }
  }
  if (!draw.frequencies.allFinite()) {
    throw std::runtime_error("sample_frequencies: non-finite frequency sample");
  }
  return draw;
}

Eigen::VectorXd feature_map(const Eigen::VectorXd& x, const FrequencyDraw& draw) {
  if (x.size() != draw.frequencies.cols()) {
    throw std::invalid_argument("feature_map: input dimension mismatch");
  }
  const int D = static_cast<int>(draw.frequencies.rows());
  const double scale = 1.0 / std::sqrt(static_cast<double>(D));
  const Eigen::VectorXd proj = draw.frequencies * x;
  Eigen::VectorXd phi(2 * D);
  for (int i = 0; i < D; ++i) {
    phi(2 * i) = scale * std::sin(proj(i));
    phi(2 * i + 1) = scale * std::cos(proj(i));
  }
  return phi;
}

Eigen::MatrixXd feature_map_matrix(const Eigen::MatrixXd& X, const FrequencyDraw& draw) {
  if (X.cols() != draw.frequencies.cols()) {
    throw std::invalid_argument("feature_map_matrix: input dimension mismatch");
  }
  const int D = static_cast<int>(draw.frequencies.rows());
  const int n = static_cast<int>(X.rows());
  const double scale = 1.0 / std::sqrt(static_cast<double>(D));
  const Eigen::MatrixXd proj = draw.frequencies * X.transpose();  // D x N
  Eigen::MatrixXd phi(2 * D, n);
  for (int i = 0; i < D; ++i) {
    phi.row(2 * i) = scale * proj.row(i).array().sin();
    phi.row(2 * i + 1) = scale * proj.row(i).array().cos();
  }
  return phi;
}

double exact_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& x2,
                    const KernelSpec& spec) {
  spec.validate();
  if (x.size() != x2.size()) {
    throw std::invalid_argument("exact_kernel: input dimension mismatch");
  }
  const double r = (x - x2).norm();
  const double ell = spec.lengthscale;
  if (spec.family == KernelFamily::RBF) {
    return std::exp(-r * r / (2.0 * ell * ell));
  }
  if (spec.smoothness == 1.5) {
    const double a = std::sqrt(3.0) * r / ell;
    return (1.0 + a) * std::exp(-a);
  }
  if (spec.smoothness == 2.5) {
    const double a = std::sqrt(5.0) * r / ell;
    return (1.0 + a + a * a / 3.0) * std::exp(-a);
  }
  throw std::invalid_argument("exact_kernel: Matern smoothness must be 1.5 or 2.5");
}

double median_heuristic_lengthscale(const Eigen::MatrixXd& X) {
  const int n = static_cast<int>(X.rows());
  if (n < 2) throw std::invalid_argument("median_heuristic_lengthscale: need >= 2 rows");
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dists.push_back((X.row(i) - X.row(j)).norm());
    }
  }
  const std::size_t m = dists.size();
  auto mid = dists.begin() + m / 2;
  std::nth_element(dists.begin(), mid, dists.end());
  double median = *mid;
  if (m % 2 == 0) {
    auto lo = std::max_element(dists.begin(), mid);
    median = 0.5 * (*lo + median);
  }
  if (!(median > 0.0)) {
    throw std::invalid_argument(
        "median_heuristic_lengthscale: median pairwise distance is zero");
  }
  return median;
}

}  // namespace egpcp
