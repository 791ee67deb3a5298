#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace egpcp {

enum class KernelFamily { RBF, Matern };

struct KernelSpec {
  KernelFamily family = KernelFamily::RBF;
  double lengthscale = 1.0;
  double smoothness = 1.5;    // Matern nu; ignored for RBF
  int input_dim = 1;          // d
  int num_frequencies = 400;  // D (feature map has 2D entries)

  void validate() const;
};

std::string kernel_name(const KernelSpec& spec);

// D x d matrix of i.i.d. spectral frequency samples, one kernel frequency
// per row. Reproducible from (spec, seed).
struct FrequencyDraw {
  Eigen::MatrixXd frequencies;
  std::uint64_t seed = 0;
};

// RBF rows are N(0, I/lengthscale^2); Matern-nu rows are multivariate-t with
// 2*nu degrees of freedom, drawn as g*sqrt(2 nu/u)/lengthscale with g standard
// Gaussian and u ~ chi-squared(2 nu).
FrequencyDraw sample_frequencies(const KernelSpec& spec, std::uint64_t seed);

// (1/sqrt(D)) [sin(v_1.x), cos(v_1.x), ..., sin(v_D.x), cos(v_D.x)].
// Unit Euclidean norm for every x.
Eigen::VectorXd feature_map(const Eigen::VectorXd& x, const FrequencyDraw& draw);

// Column n is feature_map of row n of X. Returns 2D x N.
Eigen::MatrixXd feature_map_matrix(const Eigen::MatrixXd& X, const FrequencyDraw& draw);

// Closed-form kernel value; Matern supports nu in {1.5, 2.5}.
double exact_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& x2,
                    const KernelSpec& spec);

// Median pairwise Euclidean distance, the default lengthscale choice.
double median_heuristic_lengthscale(const Eigen::MatrixXd& X);

}  // namespace egpcp
