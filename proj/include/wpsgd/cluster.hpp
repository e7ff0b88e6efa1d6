#pragma once

#include <cstdint>
#include <vector>

#include "wpsgd/aggregation.hpp"
#include "wpsgd/trainer.hpp"

namespace wpsgd {

struct ClusterSpec {
  std::size_t k = 1;
  DelayProfile delays{std::vector<std::uint64_t>{0}};
  std::uint64_t partition_seed = 0;
  // Relative data quantity per node; normalized internally. Empty = equal.
  std::vector<double> data_shares;

  void validate() const;
};

// Convenience: node speed factors -> iteration deficits,
// T_i = round(t * (1 - f_i / f_max)).
std::vector<std::uint64_t> delays_from_speed_factors(const std::vector<double>& factors,
                                                     std::uint64_t t);

struct ParallelRunResult {
  DenseModel final_model;
  std::vector<DenseModel> per_node_models;  // node i trained t - T_i steps
  std::vector<Checkpoint> checkpoints;      // combined model at fastest-node cadence

  friend bool operator==(const ParallelRunResult&, const ParallelRunResult&) = default;
};

// Share-proportional slices of a seeded global shuffle (largest-remainder
// apportionment). With k = 1 the dataset is returned as-is so that a
// one-node cluster run coincides exactly with the standalone trainer.
std::vector<Dataset> partition(const Dataset& d, const ClusterSpec& spec);

// Every node consumes t samples; outputs are averaged uniformly.
// Requires all delays zero.
ParallelRunResult run_simuparallel(const Dataset& d, const ClusterSpec& spec,
                                   const TrainConfig& cfg, std::size_t threads = 1);

// Node i trains t - T_i steps; outputs combined with rate^{T_i} weights.
// rate = 1 - lambda*eta gives the framework weighting; a fitted rate < 1
// strengthens the correction.
ParallelRunResult run_wpsgd(const Dataset& d, const ClusterSpec& spec,
                            const TrainConfig& cfg, double rate,
                            std::size_t threads = 1, Warnings* warnings = nullptr);

// Same training as run_wpsgd but uniform 1/k weights regardless of delays.
ParallelRunResult run_direct_average_unbalanced(const Dataset& d, const ClusterSpec& spec,
                                                const TrainConfig& cfg,
                                                std::size_t threads = 1);

// Models are averaged (and redistributed) every `span` fastest-node
// iterations; span must divide t. Weights for each round come from that
// round's step deficits.
ParallelRunResult run_periodic_averaging(const Dataset& d, const ClusterSpec& spec,
                                         const TrainConfig& cfg, std::uint64_t span,
                                         double rate, std::size_t threads = 1,
                                         Warnings* warnings = nullptr);

}  // namespace wpsgd
