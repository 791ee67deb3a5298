#pragma once

#include <Eigen/Dense>

namespace egpcp {

// Node-attributed graph: symmetric binary adjacency (zero diagonal),
// per-node feature rows and real-valued labels.
struct Graph {
  Eigen::MatrixXd adjacency;  // N x N, entries in {0,1}
  Eigen::MatrixXd features;   // N x d
  Eigen::VectorXd labels;     // N

  int n_nodes() const { return static_cast<int>(adjacency.rows()); }
  int n_features() const { return static_cast<int>(features.cols()); }
  int degree(int node) const;
  void validate() const;
};

// Row-stochastic neighborhood-averaging transform P = (D + I)^-1 (I + A).
struct Propagation {
  Eigen::MatrixXd matrix;  // N x N, nonnegative, rows sum to 1

  int n_nodes() const { return static_cast<int>(matrix.rows()); }
};

// Symmetric k-NN adjacency by Euclidean distance: i ~ j if j is among the k
// nearest neighbors of i or vice versa (union symmetrization). Distance ties
// are broken by lower node index. Requires at least k+1 nodes.
Eigen::MatrixXd build_knn_graph(const Eigen::MatrixXd& features, int k);

Propagation propagation_matrix(const Eigen::MatrixXd& adjacency);

// Phi * P^T. Column n of the result is the degree-normalized average of the
// columns of Phi over the closed one-hop neighborhood of node n.
Eigen::MatrixXd transform_features(const Eigen::MatrixXd& rf_features,
                                   const Propagation& prop);

Graph make_graph(Eigen::MatrixXd features, Eigen::VectorXd labels, int k);

}  // namespace egpcp
