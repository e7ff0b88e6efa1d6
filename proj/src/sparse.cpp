#include "wpsgd/sparse.hpp"

#include <cmath>
#include <string>

#include "wpsgd/error.hpp"

namespace wpsgd {

SparseVector::SparseVector(std::size_t dim, std::vector<SparseEntry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  std::size_t prev = 0;
  bool first = true;
  for (const auto& e : entries_) {
    if (!first && e.index <= prev) {
      throw ConfigError("sparse vector indices must be strictly increasing (index " +
                        std::to_string(e.index) + " after " + std::to_string(prev) + ")");
    }
    if (e.index >= dim_) {
      throw DimensionError("sparse index " + std::to_string(e.index) +
                           " out of range for dim " + std::to_string(dim_));
    }
    if (e.value == 0.0) {
      throw ConfigError("sparse vector stores a zero value at index " +
                        std::to_string(e.index) + "; canonical form forbids zeros");
    }
    prev = e.index;
    first = false;
  }
}

void Dataset::validate() const {
  if (samples.empty()) {
    throw ConfigError("dataset is empty");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    if (s.label != 0 && s.label != 1) {
      throw ConfigError("sample " + std::to_string(i) + " has label " +
                        std::to_string(s.label) + "; expected 0 or 1");
    }
    if (s.features.dim() != dim) {
      throw DimensionError("sample " + std::to_string(i) + " has dim " +
                           std::to_string(s.features.dim()) + "; dataset dim is " +
                           std::to_string(dim));
    }
  }
}

DenseModel make_model(std::size_t dim, double init_value) {
  if (!std::isfinite(init_value)) {
    throw NumericError("model init value is not finite");
  }
  DenseModel m;
  m.weights.assign(dim, init_value);
  return m;
}

double dot(const SparseVector& x, const DenseModel& w) {
  if (x.dim() != w.dim()) {
    throw DimensionError("dot: sparse dim " + std::to_string(x.dim()) +
                         " vs model dim " + std::to_string(w.dim()));
  }
  double acc = 0.0;
  for (const auto& e : x.entries()) {
    acc += e.value * w.weights[e.index];
  }
  return acc;
}

void scale_add(DenseModel& w, double a, const SparseVector& x) {
  if (x.dim() != w.dim()) {
    throw DimensionError("scale_add: sparse dim " + std::to_string(x.dim()) +
                         " vs model dim " + std::to_string(w.dim()));
  }
  if (a == 0.0) {
    return;
  }
  for (const auto& e : x.entries()) {
    w.weights[e.index] += a * e.value;
  }
}

double l2_norm_sq(const SparseVector& x) {
  double acc = 0.0;
  for (const auto& e : x.entries()) {
    acc += e.value * e.value;
  }
  return acc;
}

double l2_norm_sq(const DenseModel& w) {
  double acc = 0.0;
  for (double v : w.weights) {
    acc += v * v;
  }
  return acc;
}

double max_sample_norm_sq(const Dataset& d) {
  double best = 0.0;
  for (const Sample& s : d.samples) {
    const double b = l2_norm_sq(s.features);
    if (b > best) {
      best = b;
    }
  }
  return best;
}

}  // namespace wpsgd
