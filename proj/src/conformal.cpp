#include "egpcp/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace egpcp {

namespace {

void check_var(double var, const char* where) {
  if (!(var > 0.0)) {
    throw std::invalid_argument(std::string(where) + ": var must be > 0");
  }
}

void step_threshold(ConformalState& state, bool miscovered) {
  state.threshold -= state.rate * (state.miscoverage - (miscovered ? 1.0 : 0.0));
  if (state.clamp_bound) {
    state.threshold = std::clamp(state.threshold, 0.0, *state.clamp_bound);
  }
}

}  // namespace

double npll_score(double mean, double var, double y) {
  check_var(var, "npll_score");
  const double diff = y - mean;
  return 0.5 * std::log(2.0 * std::numbers::pi * var) + diff * diff / (2.0 * var);
}

PredictionSet invert_to_interval(double mean, double var, double q) {
  check_var(var, "invert_to_interval");
  const double disc = 2.0 * q - std::log(2.0 * std::numbers::pi * var);
  if (disc < 0.0) {
    return {mean, mean, /*empty=*/true};
  }
  const double r = std::sqrt(var * disc);
  return {mean - r, mean + r, /*empty=*/false};
}

PredictionSet bcs_interval(double mean, double var, double credibility) {
  check_var(var, "bcs_interval");
  if (!(credibility > 0.0 && credibility < 1.0)) {
    throw std::invalid_argument("bcs_interval: credibility must be in (0,1)");
  }
  // z = 2 at the 95% level, matching the usual two-sigma convention.
  const double z = std::abs(credibility - 0.95) < 1e-12
                       ? 2.0
                       : normal_quantile(0.5 * (1.0 + credibility));
  const double r = z * std::sqrt(var);
  return {mean - r, mean + r, /*empty=*/false};
}

void ocp_update(ConformalState& state, double score) {
  if (state.mode != SetMode::OCP) {
    throw std::logic_error("ocp_update: state mode is not OCP");
  }
  const bool miscovered = score > state.threshold;
  state.stats.steps += 1;
  if (!miscovered) state.stats.covered += 1;
  step_threshold(state, miscovered);
}

double init_threshold(const std::vector<double>& scores, double miscoverage) {
  if (scores.empty()) throw std::invalid_argument("init_threshold: empty score list");
  if (!(miscoverage > 0.0 && miscoverage < 1.0)) {
    throw std::invalid_argument("init_threshold: miscoverage must be in (0,1)");
  }
  const auto n = static_cast<long>(scores.size());
  const auto rank =
      static_cast<long>(std::ceil((1.0 - miscoverage) * static_cast<double>(n + 1)));
  std::vector<double> sorted = scores;
  if (rank > n) {
    return *std::max_element(sorted.begin(), sorted.end());
  }
  auto nth = sorted.begin() + (rank - 1);
  std::nth_element(sorted.begin(), nth, sorted.end());
  return *nth;
}

CoverageReport coverage_report(const ConformalState& state) {
  if (state.stats.steps < 1) {
    throw std::logic_error("coverage_report: no steps recorded");
  }
  const double steps = static_cast<double>(state.stats.steps);
  return {static_cast<double>(state.stats.covered) / steps,
          state.stats.total_width / steps,
          static_cast<double>(state.stats.empty_sets) / steps};
}

PredictionSet emit_set(const ConformalState& state, double mean, double var) {
  if (state.mode == SetMode::BCS) {
    return bcs_interval(mean, var, 1.0 - state.miscoverage);
  }
  return invert_to_interval(mean, var, state.threshold);
}

PredictionSet record_outcome(ConformalState& state, double mean, double var,
                             double y) {
  const PredictionSet set = emit_set(state, mean, var);
  bool covered;
  if (state.mode == SetMode::BCS) {
    covered = set.contains(y);
  } else {
    // the paper's indicator: covered iff score <= pre-update threshold
    covered = npll_score(mean, var, y) <= state.threshold;
  }
  state.stats.steps += 1;
  if (covered) state.stats.covered += 1;
  if (set.empty) state.stats.empty_sets += 1;
  state.stats.total_width += set.width();
  if (state.mode == SetMode::OCP) {
    step_threshold(state, !covered);
  }
  return set;
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must be in (0,1)");
  }
  // Acklam's rational approximation with one Halley refinement.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double err = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u =
      err * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace egpcp
