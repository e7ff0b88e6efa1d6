#include "wpsgd/trainer.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "wpsgd/error.hpp"
#include "wpsgd/rng.hpp"

namespace wpsgd {

void TrainConfig::validate() const {
  loss.validate();
  if (!std::isfinite(init_value)) {
    throw ConfigError("init_value must be finite");
  }
}

Dataset shuffle(const Dataset& d, std::uint64_t seed) {
  Dataset out = d;
  Rng rng(seed);
  shuffle_in_place(out.samples, rng);
  return out;
}

SequentialTrainer::SequentialTrainer(Dataset shard, const TrainConfig& cfg,
                                     std::uint64_t stream)
    : loss_(cfg.loss) {
  cfg.validate();
  shard.validate();
  data_ = shuffle(shard, stream_seed(cfg.seed, stream));
  model_ = make_model(data_.dim, cfg.init_value);
}

void SequentialTrainer::run(std::uint64_t steps) {
  const std::size_t m = data_.samples.size();
  for (std::uint64_t n = 0; n < steps; ++n) {
    const Sample& s = data_.samples[cursor_];
    try {
      sgd_step(model_, s, loss_);
    } catch (const NumericError& e) {
      throw NumericError(std::string(e.what()) + " (iteration " +
                         std::to_string(model_.iterations + 1) + ")");
    }
    cursor_ = (cursor_ + 1) % m;
  }
}

void SequentialTrainer::advance_to(std::uint64_t target_iterations) {
  if (target_iterations < model_.iterations) {
    throw ConfigError("advance_to: target " + std::to_string(target_iterations) +
                      " precedes current iteration " + std::to_string(model_.iterations));
  }
  run(target_iterations - model_.iterations);
}

void SequentialTrainer::set_weights(std::span<const double> weights) {
  if (weights.size() != model_.weights.size()) {
    throw DimensionError("set_weights: got " + std::to_string(weights.size()) +
                         " components, model has " + std::to_string(model_.weights.size()));
  }
  model_.weights.assign(weights.begin(), weights.end());
}

TrainResult train(const Dataset& d, const TrainConfig& cfg) {
  SequentialTrainer trainer(d, cfg, /*stream=*/0);
  TrainResult out;
  const std::uint64_t t = cfg.total_iterations;
  if (cfg.checkpoint_every > 0) {
    for (std::uint64_t n = cfg.checkpoint_every; n <= t; n += cfg.checkpoint_every) {
      trainer.advance_to(n);
      out.checkpoints.push_back({n, trainer.model()});
    }
  }
  trainer.advance_to(t);
  out.model = trainer.model();
  return out;
}

}  // namespace wpsgd
