#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wpsgd {

struct SparseEntry {
  std::size_t index;  // 0-based dimension id
  double value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Canonical sparse sample vector: indices strictly increasing, all < dim,
// no stored zeros. Validated at construction.
class SparseVector {
 public:
  SparseVector() = default;
  SparseVector(std::size_t dim, std::vector<SparseEntry> entries);

  std::size_t dim() const { return dim_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseEntry> entries_;
};

struct Sample {
  SparseVector features;
  int label = 0;  // binary class, 0 or 1

  // Hinge-loss convention: file labels {0,1} map to {-1,+1}.
  double yhat() const { return label == 1 ? 1.0 : -1.0; }

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Dataset {
  std::vector<Sample> samples;
  std::size_t dim = 0;

  std::size_t size() const { return samples.size(); }

  // Throws unless non-empty, labels in {0,1}, and every sample matches dim.
  void validate() const;
};

// Dense parameter vector plus the number of SGD updates applied to it.
struct DenseModel {
  std::vector<double> weights;
  std::uint64_t iterations = 0;

  std::size_t dim() const { return weights.size(); }

  friend bool operator==(const DenseModel&, const DenseModel&) = default;
};

DenseModel make_model(std::size_t dim, double init_value);

double dot(const SparseVector& x, const DenseModel& w);

// w += a * x, touching only x's support. Iteration count unchanged.
void scale_add(DenseModel& w, double a, const SparseVector& x);

double l2_norm_sq(const SparseVector& x);
double l2_norm_sq(const DenseModel& w);

// Largest beta^2 = ||x||^2 over the dataset.
double max_sample_norm_sq(const Dataset& d);

}  // namespace wpsgd
