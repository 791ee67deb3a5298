#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace egpcp {

struct Dataset {
  Eigen::MatrixXd features;  // N x d
  Eigen::VectorXd labels;    // N
  std::vector<std::string> feature_names;
  std::string label_name = "y";
  std::string name;
  std::uint64_t seed = 0;

  int n_rows() const { return static_cast<int>(features.rows()); }
  int n_features() const { return static_cast<int>(features.cols()); }
};

// x ~ U[-2,2]^3, y = sin(x1) + 0.5 cos(2 x2) + 0.3 x3 + N(0, s(x)^2) with
// s(x) = 0.1 + 0.2 ||x|| / sqrt(3). Noise grows with feature magnitude.
Dataset generate_heteroscedastic(int n, std::uint64_t seed);

// x ~ U[-2,2]^3, y = 0.8 x1 - 0.5 x2 + 0.3 x3 + 0.1 sin(3 x1) + N(0, 0.05^2).
Dataset generate_linear(int n, std::uint64_t seed);

double heteroscedastic_mean(const Eigen::Vector3d& x);
double heteroscedastic_noise_std(const Eigen::Vector3d& x);
double linear_mean(const Eigen::Vector3d& x);

struct CsvOptions {
  char delimiter = ',';
  std::optional<int> max_rows;       // uniform random subsample when exceeded
  std::uint64_t subsample_seed = 0;
};

// Header row required; '.'-decimal floats; rows with missing cells (empty,
// "na", "nan") in the selected columns are dropped.
Dataset load_csv(const std::string& path, const std::string& target_column,
                 const std::vector<std::string>& feature_columns,
                 const CsvOptions& options = {});

void write_csv(const Dataset& ds, const std::string& path, char delimiter = ',');

struct SplitSpec {
  double init_fraction = 0.3;  // in (0,1)
  std::uint64_t permutation_seed = 0;
};

// z-scoring statistics computed on the initial split only.
struct Scaler {
  Eigen::VectorXd feature_mean;
  Eigen::VectorXd feature_std;
  double label_mean = 0.0;
  double label_std = 1.0;
};

struct SplitResult {
  Dataset init;
  Dataset stream;
  Scaler scaler;
};

// Permute rows, take the first ceil(init_fraction N) as the initial set and
// the rest as the stream (in permuted order), and z-score features and labels
// with initial-set statistics.
SplitResult standardize_and_split(const Dataset& ds, const SplitSpec& split);

}  // namespace egpcp
