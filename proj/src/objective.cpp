#include "wpsgd/objective.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wpsgd/error.hpp"

namespace wpsgd {

void LossParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("lambda must be positive and finite");
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ConfigError("eta must be positive and finite");
  }
  const double el = eta * lambda;
  if (!(el > 0.0 && el < 1.0)) {
    throw ConfigError("eta*lambda must lie in (0, 1); got " + std::to_string(el));
  }
}

double sample_loss(const DenseModel& w, const Sample& s, const LossParams& p) {
  const double margin = s.yhat() * dot(s.features, w);
  const double hinge = std::max(0.0, 1.0 - margin);
  return 0.5 * p.lambda * l2_norm_sq(w) + hinge;
}

double objective_value(const DenseModel& w, const Dataset& d, const LossParams& p) {
  if (d.samples.empty()) {
    throw ConfigError("objective_value: empty dataset");
  }
  // The regularizer does not depend on the sample; hoist it out of the mean.
  double hinge_sum = 0.0;
  for (const Sample& s : d.samples) {
    const double margin = s.yhat() * dot(s.features, w);
    hinge_sum += std::max(0.0, 1.0 - margin);
  }
  return 0.5 * p.lambda * l2_norm_sq(w) +
         hinge_sum / static_cast<double>(d.samples.size());
}

void apply_update(DenseModel& target, const DenseModel& stale, const Sample& s,
                  const LossParams& p) {
  p.validate();
  if (stale.dim() != target.dim()) {
    throw DimensionError("apply_update: stale dim " + std::to_string(stale.dim()) +
                         " vs target dim " + std::to_string(target.dim()));
  }
  const double yhat = s.yhat();
  const double margin = yhat * dot(s.features, stale);
  if (!std::isfinite(margin)) {
    throw NumericError("apply_update: non-finite margin");
  }

  const double shrink = p.eta * p.lambda;
  const std::size_t d = target.dim();
  double* tw = target.weights.data();
  const double* sw = stale.weights.data();
  for (std::size_t i = 0; i < d; ++i) {
    tw[i] -= shrink * sw[i];
  }

  // Margin exactly 1 counts as satisfied, so the step is deterministic there.
  if (margin < 1.0) {
    const double step = p.eta * yhat;
    for (const auto& e : s.features.entries()) {
      tw[e.index] += step * e.value;
      if (!std::isfinite(tw[e.index])) {
        throw NumericError("apply_update: non-finite weight at component " +
                           std::to_string(e.index));
      }
    }
  }
  target.iterations += 1;
}

void sgd_step(DenseModel& w, const Sample& s, const LossParams& p) {
  apply_update(w, w, s, p);
}

double error_rate(const DenseModel& w, const Dataset& d) {
  if (d.samples.empty()) {
    throw ConfigError("error_rate: empty dataset");
  }
  std::size_t wrong = 0;
  for (const Sample& s : d.samples) {
    const int predicted = dot(s.features, w) > 0.0 ? 1 : 0;
    if (predicted != s.label) {
      ++wrong;
    }
  }
  return static_cast<double>(wrong) / static_cast<double>(d.samples.size());
}

}  // namespace wpsgd
