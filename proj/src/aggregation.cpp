#include "wpsgd/aggregation.hpp"

#include <algorithm>
#include <cmath>

#include "wpsgd/error.hpp"

namespace wpsgd {

DelayProfile::DelayProfile(std::vector<std::uint64_t> delays)
    : delays_(std::move(delays)) {
  if (delays_.empty()) {
    throw ConfigError("delay profile needs at least one node");
  }
  if (*std::min_element(delays_.begin(), delays_.end()) != 0) {
    throw ConfigError("delay profile must contain a zero delay (the fastest node); "
                      "rebase delays by subtracting the minimum");
  }
}

std::uint64_t DelayProfile::max_delay() const {
  return *std::max_element(delays_.begin(), delays_.end());
}

WeightVector compute_weights(const DelayProfile& profile, double rate,
                             Warnings* warnings) {
  if (!(rate > 0.0) || rate > 1.0 || !std::isfinite(rate)) {
    throw ConfigError("contracting rate must lie in (0, 1]; got " + std::to_string(rate));
  }
  const auto& delays = profile.delays();
  const std::uint64_t t_min = *std::min_element(delays.begin(), delays.end());

  WeightVector w;
  w.values.resize(delays.size());
  double total = 0.0;
  for (std::size_t i = 0; i < delays.size(); ++i) {
    // t_min is 0 by invariant; the offset is kept so that a profile with a
    // huge common delay would still normalize instead of underflowing.
    w.values[i] = std::pow(rate, static_cast<double>(delays[i] - t_min));
    total += w.values[i];
  }
  for (std::size_t i = 0; i < delays.size(); ++i) {
    double v = w.values[i] / total;
    if (v < 1e-300) {
      v = 0.0;
      if (warnings != nullptr) {
        warnings->push_back("node " + std::to_string(i) + " weight underflowed (delay " +
                            std::to_string(delays[i]) + "); set to exactly 0");
      }
    }
    w.values[i] = v;
  }
  return w;
}

DenseModel combine(std::span<const DenseModel> models, const WeightVector& weights) {
  if (models.empty()) {
    throw ConfigError("combine: no models");
  }
  if (models.size() != weights.values.size()) {
    throw DimensionError("combine: " + std::to_string(models.size()) + " models vs " +
                         std::to_string(weights.values.size()) + " weights");
  }
  const std::size_t d = models.front().dim();
  DenseModel out;
  out.weights.assign(d, 0.0);
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (models[i].dim() != d) {
      throw DimensionError("combine: model " + std::to_string(i) + " has dim " +
                           std::to_string(models[i].dim()) + "; expected " +
                           std::to_string(d));
    }
    const double wi = weights.values[i];
    const double* src = models[i].weights.data();
    double* dst = out.weights.data();
    for (std::size_t j = 0; j < d; ++j) {
      dst[j] += wi * src[j];
    }
    out.iterations = std::max(out.iterations, models[i].iterations);
  }
  return out;
}

DenseModel direct_average(std::span<const DenseModel> models) {
  if (models.empty()) {
    throw ConfigError("direct_average: no models");
  }
  WeightVector uniform;
  uniform.values.assign(models.size(), 1.0 / static_cast<double>(models.size()));
  return combine(models, uniform);
}

}  // namespace wpsgd
