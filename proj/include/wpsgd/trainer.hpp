#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wpsgd/objective.hpp"
#include "wpsgd/sparse.hpp"

namespace wpsgd {

struct TrainConfig {
  LossParams loss;
  std::uint64_t total_iterations = 0;
  std::uint64_t seed = 0;
  double init_value = 0.0;        // applied to every weight component
  std::uint64_t checkpoint_every = 0;  // in iterations; 0 = never

  void validate() const;
};

struct Checkpoint {
  std::uint64_t iteration = 0;
  DenseModel model;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

// Seed-determined permutation, stable across platforms.
Dataset shuffle(const Dataset& d, std::uint64_t seed);

// Single-node SGD loop over a fixed shuffled order. Resumable: advancing in
// pieces is bit-identical to one long run. When the iteration budget exceeds
// the data size the same shuffled order is re-traversed.
class SequentialTrainer {
 public:
  // `stream` selects the per-node RNG stream (node i of a cluster uses i);
  // the shuffle seed is stream_seed(cfg.seed, stream).
  SequentialTrainer(Dataset shard, const TrainConfig& cfg, std::uint64_t stream = 0);

  void run(std::uint64_t steps);
  void advance_to(std::uint64_t target_iterations);

  const DenseModel& model() const { return model_; }
  std::uint64_t iterations() const { return model_.iterations; }

  // Overwrites the weights (an averaging round) but keeps this node's
  // iteration count and sample cursor.
  void set_weights(std::span<const double> weights);

 private:
  Dataset data_;
  LossParams loss_;
  DenseModel model_;
  std::size_t cursor_ = 0;
};

struct TrainResult {
  DenseModel model;
  std::vector<Checkpoint> checkpoints;
};

// Trains for cfg.total_iterations from a fresh init, emitting checkpoints at
// the configured cadence (iterations that are multiples of checkpoint_every).
TrainResult train(const Dataset& d, const TrainConfig& cfg);

}  // namespace wpsgd
