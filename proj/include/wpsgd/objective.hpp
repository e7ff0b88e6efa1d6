#pragma once

#include "wpsgd/sparse.hpp"

namespace wpsgd {

// Regularized hinge loss parameters. The contraction factor (1 - eta*lambda)
// drives every bound in the theory module, so eta*lambda must stay in (0, 1).
struct LossParams {
  double lambda = 0.0;
  double eta = 0.0;

  void validate() const;
};

// (lambda/2)*||w||^2 + max(0, 1 - yhat*(w.x))
double sample_loss(const DenseModel& w, const Sample& s, const LossParams& p);

// Mean of sample_loss over the dataset.
double objective_value(const DenseModel& w, const Dataset& d, const LossParams& p);

// One SGD update of `target` with the subgradient evaluated at `stale`:
//   target <- target - eta*(lambda*stale + g(stale))
// where g = -yhat*x when the margin at `stale` is violated, else 0.
// `target` and `stale` may alias, which is the ordinary sequential step.
// Both the trainer and the delay engine route updates through this kernel so
// the zero-lag degeneracy is exact.
void apply_update(DenseModel& target, const DenseModel& stale, const Sample& s,
                  const LossParams& p);

// apply_update with target == stale; increments the iteration count.
void sgd_step(DenseModel& w, const Sample& s, const LossParams& p);

// Fraction of samples misclassified by sign(w.x); w.x == 0 predicts class 0.
double error_rate(const DenseModel& w, const Dataset& d);

}  // namespace wpsgd
