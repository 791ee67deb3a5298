#pragma once

#include <optional>
#include <vector>

namespace egpcp {

enum class SetMode { OCP, FixedCP, BCS };

struct PredictionSet {
  double lower = 0.0;
  double upper = 0.0;
  bool empty = false;

  double width() const { return empty ? 0.0 : upper - lower; }
  bool contains(double y) const { return !empty && y >= lower && y <= upper; }
};

struct CoverageStats {
  long steps = 0;
  long covered = 0;
  long empty_sets = 0;
  double total_width = 0.0;
};

// One conformal stream: the adaptive threshold q_n plus running coverage and
// width accounting. FixedCP keeps q at its initial value; BCS ignores q and
// emits credible intervals at level 1 - miscoverage.
struct ConformalState {
  SetMode mode = SetMode::OCP;
  double threshold = 0.0;   // q_n
  double rate = 0.01;       // eta (OCP step size)
  double miscoverage = 0.1; // alpha
  std::optional<double> clamp_bound;  // clip threshold to [0, B] when set
  CoverageStats stats;
};

struct CoverageReport {
  double coverage = 0.0;
  double mean_width = 0.0;
  double empty_rate = 0.0;
};

// Negative predictive log-likelihood of y under N(mean, var):
// 0.5 log(2 pi var) + (y - mean)^2 / (2 var).
double npll_score(double mean, double var, double y);

// {y : npll_score(mean, var, y) <= q}. Empty when q < 0.5 log(2 pi var);
// otherwise [mean - r, mean + r] with r = sqrt(var (2q - log(2 pi var))).
PredictionSet invert_to_interval(double mean, double var, double q);

// [mean - z sqrt(var), mean + z sqrt(var)] with z the two-sided standard
// normal quantile for the credibility level (z = 2 at 0.95).
PredictionSet bcs_interval(double mean, double var, double credibility);

// Threshold recursion q <- q - rate (alpha - 1[score > q]); coverage is
// recorded against the pre-update threshold. OCP mode only. Width is not
// known at score level; use record_outcome for width accounting.
void ocp_update(ConformalState& state, double score);

// The ceil((1-alpha)(n+1))-th smallest score, or the maximum when that rank
// exceeds n.
double init_threshold(const std::vector<double>& scores, double miscoverage);

CoverageReport coverage_report(const ConformalState& state);

// Set the stream emits for (mean, var) under the current state and mode.
PredictionSet emit_set(const ConformalState& state, double mean, double var);

// Full predict-reveal-update step: emit the set against the pre-update
// threshold, record coverage/width/emptiness, then advance the threshold in
// OCP mode. Returns the emitted set.
PredictionSet record_outcome(ConformalState& state, double mean, double var,
                             double y);

// Inverse standard normal CDF (accurate to ~1e-14).
double normal_quantile(double p);

}  // namespace egpcp
