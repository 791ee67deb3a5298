#include "egpcp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace egpcp {

int Graph::degree(int node) const {
  if (node < 0 || node >= n_nodes()) {
    throw std::invalid_argument("Graph::degree: node index out of range");
  }
  return static_cast<int>(adjacency.row(node).sum() + 0.5);
}

void Graph::validate() const {
  const auto n = adjacency.rows();
  if (n < 1) throw std::invalid_argument("Graph: need at least one node");
  if (adjacency.cols() != n) throw std::invalid_argument("Graph: adjacency not square");
  if (features.rows() != n) throw std::invalid_argument("Graph: feature row count != n_nodes");
  if (labels.size() != n) throw std::invalid_argument("Graph: label count != n_nodes");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0.0) throw std::invalid_argument("Graph: nonzero diagonal");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double a = adjacency(i, j);
      if (a != 0.0 && a != 1.0) throw std::invalid_argument("Graph: adjacency entries must be 0 or 1");
      if (a != adjacency(j, i)) throw std::invalid_argument("Graph: adjacency not symmetric");
    }
  }
}

Eigen::MatrixXd build_knn_graph(const Eigen::MatrixXd& features, int k) {
  const int n = static_cast<int>(features.rows());
  if (k < 1) throw std::invalid_argument("build_knn_graph: k must be >= 1");
  if (n <= k) {
    throw std::invalid_argument("build_knn_graph: need at least k+1 nodes, got " +
                                std::to_string(n) + " for k=" + std::to_string(k));
  }
  if (!features.allFinite()) {
    throw std::invalid_argument("build_knn_graph: non-finite feature value");
  }

  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::pair<double, int>> candidates(n - 1);
  for (int i = 0; i < n; ++i) {
    int idx = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d2 = (features.row(i) - features.row(j)).squaredNorm();
      candidates[idx++] = {d2, j};
    }
    // ties broken by lower node index
    std::partial_sort(candidates.begin(), candidates.begin() + k, candidates.end());
    for (int t = 0; t < k; ++t) {
      const int j = candidates[t].second;
      adjacency(i, j) = 1.0;
      adjacency(j, i) = 1.0;
    }
  }
  return adjacency;
}

Propagation propagation_matrix(const Eigen::MatrixXd& adjacency) {
  const auto n = adjacency.rows();
  if (n < 1 || adjacency.cols() != n) {
    throw std::invalid_argument("propagation_matrix: adjacency must be square and nonempty");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0.0) {
      throw std::invalid_argument("propagation_matrix: adjacency must have zero diagonal");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double a = adjacency(i, j);
      if (a != 0.0 && a != 1.0) {
        throw std::invalid_argument("propagation_matrix: adjacency entries must be 0 or 1");
      }
      if (a != adjacency(j, i)) {
        throw std::invalid_argument("propagation_matrix: adjacency must be symmetric");
      }
    }
  }

  Propagation prop;
  prop.matrix = adjacency;
  prop.matrix.diagonal().array() += 1.0;  // I + A
  for (Eigen::Index i = 0; i < n; ++i) {
    const double deg = adjacency.row(i).sum();
    prop.matrix.row(i) /= (deg + 1.0);
  }
  return prop;
}

Eigen::MatrixXd transform_features(const Eigen::MatrixXd& rf_features,
                                   const Propagation& prop) {
  if (rf_features.cols() != prop.matrix.rows()) {
    throw std::invalid_argument(
        "transform_features: feature column count must equal node count");
  }
  return rf_features * prop.matrix.transpose();
}

Graph make_graph(Eigen::MatrixXd features, Eigen::VectorXd labels, int k) {
  if (labels.size() != features.rows()) {
    throw std::invalid_argument("make_graph: label count != feature row count");
  }
  Graph g;
  g.adjacency = build_knn_graph(features, k);
  g.features = std::move(features);
  g.labels = std::move(labels);
  return g;
}

}  // namespace egpcp
