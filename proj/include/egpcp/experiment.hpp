#pragma once

#include "egpcp/conformal.hpp"
#include "egpcp/data.hpp"
#include "egpcp/kernels.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace egpcp {

struct MemberConfig {
  KernelFamily family = KernelFamily::RBF;
  double smoothness = 1.5;  // Matern only
};

struct DatasetConfig {
  std::string kind = "synthetic-hetero";  // synthetic-hetero | synthetic-linear | csv
  std::string path;
  std::string target;
  std::vector<std::string> features;
  int n = 1500;                 // synthetic size
  std::optional<int> max_rows;  // csv subsample
  char delimiter = ',';
};

struct GraphConfig {
  int k = 6;
};

struct ModelConfig {
  std::vector<MemberConfig> members = {{KernelFamily::RBF, 0.0},
                                       {KernelFamily::Matern, 2.5},
                                       {KernelFamily::Matern, 1.5}};
  int num_frequencies = 400;
  double prior_var = 1.0;
  double noise_var = 0.1;
  std::optional<double> lengthscale;  // unset = median heuristic on init split
};

struct CpConfig {
  SetMode mode = SetMode::OCP;
  double alpha = 0.1;
  double eta = 0.01;
  std::optional<double> clamp_bound;
};

struct SplitConfig {
  double init_fraction = 0.3;
};

struct RunsConfig {
  int replicates = 50;
  std::uint64_t base_seed = 20250901;
};

struct ExperimentConfig {
  DatasetConfig dataset;
  GraphConfig graph;
  ModelConfig model;
  CpConfig cp;
  SplitConfig split;
  RunsConfig runs;

  void validate() const;
  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
  std::string to_json_text(int indent = 2) const;
};

struct StepRecord {
  long step = 0;  // 0-based position in the stream
  int node = 0;   // node index in the experiment's node order
  double label = 0.0;
  double fused_mean = 0.0;
  double fused_var = 0.0;
  double threshold = 0.0;  // pre-update q (meaningless in BCS mode)
  double lower = 0.0;
  double upper = 0.0;
  double width = 0.0;
  bool covered = false;
  bool empty = false;
};

using StepSink = std::function<void(const StepRecord&)>;

struct ReplicateResult {
  int replicate = 0;
  std::uint64_t seed = 0;
  double coverage = 0.0;
  double mean_width = 0.0;
  double empty_rate = 0.0;
  double threshold_initial = 0.0;
  double threshold_final = 0.0;
  long stream_steps = 0;
  double ms_per_1000_steps = 0.0;
  double label_std = 1.0;  // raw-unit label std, for de-normalizing widths
  double lengthscale = 0.0;
};

struct RunSummary {
  std::string method;
  std::vector<ReplicateResult> replicates;
  double coverage_mean = 0.0;
  double coverage_std = 0.0;
  double width_mean = 0.0;
  double width_std = 0.0;
  double empty_rate = 0.0;
  double ms_per_1000_steps = 0.0;
  bool std_degenerate = false;  // single replicate, std reported as 0
};

// One full replicate: load/generate -> standardize+split -> k-NN graph over
// all nodes -> propagation -> ensemble warm-up on the initial split ->
// in-sample threshold initialization -> stream predict/reveal/update.
ReplicateResult run_single(const ExperimentConfig& config,
                           std::uint64_t replicate_seed,
                           const StepSink& sink = {});

// Replicate i runs with seed base_seed + i; aggregates are the sample mean
// and standard deviation over replicates.
RunSummary run_replicates(const ExperimentConfig& config, int replicates,
                          std::uint64_t base_seed);
RunSummary run_replicates(const ExperimentConfig& config);

// The six table rows: {EGP, RBF} x {OCP, CP, BCS}.
std::vector<std::string> standard_methods();

// Derive the per-method config: member list (full ensemble vs single RBF)
// and conformal mode. Throws on unknown names, listing the valid ones.
ExperimentConfig config_for_method(const ExperimentConfig& base,
                                   const std::string& method);

// Paired comparison: every method row uses identical replicate seeds, hence
// identical datasets, splits, and stream orders.
std::vector<RunSummary> compare_methods(const ExperimentConfig& config,
                                        const std::vector<std::string>& methods);

std::string render_table(const std::vector<RunSummary>& rows);
std::string render_csv(const std::vector<RunSummary>& rows);
std::string render_json_lines(const std::vector<RunSummary>& rows);

}  // namespace egpcp
