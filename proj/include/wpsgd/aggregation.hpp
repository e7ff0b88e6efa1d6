#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wpsgd/sparse.hpp"

namespace wpsgd {

using Warnings = std::vector<std::string>;

// Per-node iteration deficits relative to the fastest node. The fastest node
// has deficit 0 by definition, so the minimum must be 0.
class DelayProfile {
 public:
  explicit DelayProfile(std::vector<std::uint64_t> delays);

  std::size_t k() const { return delays_.size(); }
  const std::vector<std::uint64_t>& delays() const { return delays_; }
  std::uint64_t max_delay() const;

 private:
  std::vector<std::uint64_t> delays_;
};

struct WeightVector {
  std::vector<double> values;
};

// weight_i = rate^{T_i} / sum_j rate^{T_j}, rate in (0, 1]. Exponents are
// offset by min T_i before exponentiation. A weight that normalizes below
// 1e-300 is flushed to exactly 0 and reported through `warnings`.
WeightVector compute_weights(const DelayProfile& profile, double rate,
                             Warnings* warnings = nullptr);

// v = sum_i weight_i * model_i, accumulated in ascending node order so that
// equal-input runs are reproducible bit for bit. The result's iteration count
// is the maximum over the inputs (the fastest node's count).
DenseModel combine(std::span<const DenseModel> models, const WeightVector& weights);

// Uniform 1/k combine; identical arithmetic to compute_weights(profile, 1).
DenseModel direct_average(std::span<const DenseModel> models);

}  // namespace wpsgd
