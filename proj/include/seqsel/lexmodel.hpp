#ifndef SEQSEL_LEXMODEL_HPP
#define SEQSEL_LEXMODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqsel/common.hpp"

namespace seqsel {

// Dense row-major matrix, just enough for word-model weights and gradients.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::span<const double> flat() const { return data_; }
  std::span<double> flat() { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Per-word logistic model: probability of word w on an instance x is
// sigmoid(weights.row(w) . x + bias[w]).
struct WordModel {
  Matrix weights;             // V x d
  std::vector<double> bias;   // V

  std::size_t vocab_size() const { return weights.rows(); }
  std::size_t feature_dim() const { return weights.cols(); }

  void validate() const;
};

// A bag of instance feature vectors sharing one V-length binary label vector.
// Supervision is per-bag: a positive word label means at least one instance
// carries the word, without saying which.
struct InstanceBag {
  std::vector<std::vector<double>> instances;  // each of length d
  std::vector<std::uint8_t> labels;            // length V, entries 0/1

  void validate(std::size_t vocab_size, std::size_t feature_dim) const;
};

// Per-instance word probabilities, one sigmoid per vocabulary word.
// Every entry is strictly inside (0,1).
std::vector<double> word_prob(const WordModel& model, std::span<const double> instance);

// Noisy-OR bag probability: 1 - prod_j (1 - word_prob(x_j)).
std::vector<double> bag_prob(const WordModel& model, const InstanceBag& bag);

// Mean over bags of the summed per-word cross-entropy between labels and
// noisy-OR bag probabilities. Probabilities are clamped to
// [1e-12, 1-1e-12] before the logs.
double mimll_loss(const WordModel& model, std::span<const InstanceBag> bags);

struct LossGradient {
  double loss = 0.0;
  Matrix d_weights;             // V x d
  std::vector<double> d_bias;   // V
};

// Analytic gradient of mimll_loss with respect to weights and bias.
// Matches central finite differences of mimll_loss.
LossGradient loss_gradient(const WordModel& model, std::span<const InstanceBag> bags);

struct TrainOptions {
  double step_size = 0.1;
  std::size_t epochs = 100;
  std::uint64_t seed = 0;
  // 0 trains full-batch; otherwise bags are shuffled once per epoch and
  // consumed in mini-batches of this size.
  std::size_t batch_size = 0;
};

struct TrainResult {
  WordModel model;
  std::vector<double> loss_trace;  // loss at the start of each epoch
};

// Uniform weights in [-0.01, 0.01] drawn from `seed`, zero bias.
WordModel init_word_model(std::size_t vocab_size, std::size_t feature_dim, std::uint64_t seed);

// Plain gradient descent on mimll_loss. Deterministic given the seed.
// Throws a divergence error naming the epoch if the loss goes non-finite.
TrainResult train(const WordModel& model, std::span<const InstanceBag> bags,
                  const TrainOptions& options);

}  // namespace seqsel

#endif  // SEQSEL_LEXMODEL_HPP
