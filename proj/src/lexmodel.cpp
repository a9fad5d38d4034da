#include "seqsel/lexmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "seqsel/parallel.hpp"
#include "seqsel/rng.hpp"

namespace seqsel {

namespace {

constexpr double kProbClamp = 1e-12;
constexpr std::size_t kBagBlock = 8;  // bags per reduction block

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double clamp_prob(double p) {
  return std::min(1.0 - kProbClamp, std::max(kProbClamp, p));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Loss of one bag plus, optionally, its gradient contribution accumulated
// into grad (not averaged). The per-instance derivative of the bag loss with
// respect to the logit z_jw simplifies to s_jw * (1 - p_w) * dL/dp_w, and the
// (1 - s_jw) factors cancel, so no division by values near zero occurs.
double bag_term(const WordModel& model, const InstanceBag& bag, LossGradient* grad) {
  const std::size_t v = model.vocab_size();
  const std::size_t n = bag.instances.size();

  // s[j][w] only needed transiently; keep per-word survival products.
  std::vector<std::vector<double>> probs(n);
  std::vector<double> survive(v, 1.0);  // prod_j (1 - s_jw)
  for (std::size_t j = 0; j < n; ++j) {
    probs[j] = word_prob(model, bag.instances[j]);
    for (std::size_t w = 0; w < v; ++w) survive[w] *= 1.0 - probs[j][w];
  }

  double loss = 0.0;
  std::vector<double> dldp;  // dL/dp_w times (1 - p_w), shared by all instances
  if (grad != nullptr) dldp.resize(v);
  for (std::size_t w = 0; w < v; ++w) {
    const double p = clamp_prob(1.0 - survive[w]);
    const bool positive = bag.labels[w] != 0;
    loss -= positive ? std::log(p) : std::log(1.0 - p);
    if (grad != nullptr) {
      // d(bag loss)/dz_jw = coeff_w * s_jw with coeff as below.
      dldp[w] = positive ? -(1.0 - p) / p : 1.0;
    }
  }

  if (grad != nullptr) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = bag.instances[j];
      for (std::size_t w = 0; w < v; ++w) {
        const double coeff = dldp[w] * probs[j][w];
        if (coeff == 0.0) continue;
        auto row = grad->d_weights.row(w);
        for (std::size_t k = 0; k < x.size(); ++k) row[k] += coeff * x[k];
        grad->d_bias[w] += coeff;
      }
    }
  }
  return loss;
}

void check_bags(const WordModel& model, std::span<const InstanceBag> bags) {
  model.validate();
  if (bags.empty()) fail(ErrorCode::precondition, "need at least one instance bag");
  for (const auto& bag : bags) bag.validate(model.vocab_size(), model.feature_dim());
}

}  // namespace

void WordModel::validate() const {
  if (weights.rows() == 0 || weights.cols() == 0) {
    fail(ErrorCode::shape_mismatch, "word model must have V >= 1 and d >= 1");
  }
  if (bias.size() != weights.rows()) {
    fail(ErrorCode::shape_mismatch, "bias length " + std::to_string(bias.size()) +
                                        " does not match vocabulary size " +
                                        std::to_string(weights.rows()));
  }
  for (double w : weights.flat()) {
    if (!std::isfinite(w)) fail(ErrorCode::range, "non-finite weight in word model");
  }
  for (double b : bias) {
    if (!std::isfinite(b)) fail(ErrorCode::range, "non-finite bias in word model");
  }
}

void InstanceBag::validate(std::size_t vocab_size, std::size_t feature_dim) const {
  if (instances.empty()) fail(ErrorCode::precondition, "instance bag is empty");
  for (const auto& x : instances) {
    if (x.size() != feature_dim) {
      fail(ErrorCode::shape_mismatch, "instance of length " + std::to_string(x.size()) +
                                          " in a d=" + std::to_string(feature_dim) + " bag");
    }
  }
  if (labels.size() != vocab_size) {
    fail(ErrorCode::shape_mismatch, "label vector length " + std::to_string(labels.size()) +
                                        " does not match V=" + std::to_string(vocab_size));
  }
  for (auto y : labels) {
    if (y > 1) fail(ErrorCode::range, "labels must be 0/1");
  }
}

std::vector<double> word_prob(const WordModel& model, std::span<const double> instance) {
  if (instance.size() != model.feature_dim()) {
    fail(ErrorCode::shape_mismatch, "instance length " + std::to_string(instance.size()) +
                                        " does not match feature dim " +
                                        std::to_string(model.feature_dim()));
  }
  const std::size_t v = model.vocab_size();
  std::vector<double> probs(v);
  for (std::size_t w = 0; w < v; ++w) {
    probs[w] = sigmoid(dot(model.weights.row(w), instance) + model.bias[w]);
  }
  return probs;
}

std::vector<double> bag_prob(const WordModel& model, const InstanceBag& bag) {
  if (bag.instances.empty()) fail(ErrorCode::precondition, "bag_prob needs a non-empty bag");
  bag.validate(model.vocab_size(), model.feature_dim());
  const std::size_t v = model.vocab_size();
  std::vector<double> survive(v, 1.0);
  for (const auto& x : bag.instances) {
    const auto p = word_prob(model, x);
    for (std::size_t w = 0; w < v; ++w) survive[w] *= 1.0 - p[w];
  }
  std::vector<double> probs(v);
  for (std::size_t w = 0; w < v; ++w) probs[w] = 1.0 - survive[w];
  return probs;
}

double mimll_loss(const WordModel& model, std::span<const InstanceBag> bags) {
  check_bags(model, bags);
  // Per-bag terms evaluated in parallel blocks, folded in bag order.
  const double total = blocked_reduce<double>(
      bags.size(), kBagBlock, 0.0,
      [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += bag_term(model, bags[i], nullptr);
        return s;
      },
      [](double a, double b) { return a + b; });
  return total / static_cast<double>(bags.size());
}

LossGradient loss_gradient(const WordModel& model, std::span<const InstanceBag> bags) {
  check_bags(model, bags);
  const std::size_t v = model.vocab_size();
  const std::size_t d = model.feature_dim();

  const LossGradient zero{0.0, Matrix(v, d), std::vector<double>(v, 0.0)};
  LossGradient total = blocked_reduce<LossGradient>(
      bags.size(), kBagBlock, zero,
      [&](std::size_t lo, std::size_t hi) {
        LossGradient part{0.0, Matrix(v, d), std::vector<double>(v, 0.0)};
        for (std::size_t i = lo; i < hi; ++i) {
          part.loss += bag_term(model, bags[i], &part);
        }
        return part;
      },
      [](LossGradient a, const LossGradient& b) {
        a.loss += b.loss;
        auto aw = a.d_weights.flat();
        const auto bw = b.d_weights.flat();
        for (std::size_t i = 0; i < aw.size(); ++i) aw[i] += bw[i];
        for (std::size_t i = 0; i < a.d_bias.size(); ++i) a.d_bias[i] += b.d_bias[i];
        return a;
      });

  const double inv_n = 1.0 / static_cast<double>(bags.size());
  total.loss *= inv_n;
  for (double& g : total.d_weights.flat()) g *= inv_n;
  for (double& g : total.d_bias) g *= inv_n;
  return total;
}

WordModel init_word_model(std::size_t vocab_size, std::size_t feature_dim, std::uint64_t seed) {
  if (vocab_size == 0 || feature_dim == 0) {
    fail(ErrorCode::parameter, "vocab size and feature dim must be positive");
  }
  Rng rng(seed);
  WordModel model{Matrix(vocab_size, feature_dim), std::vector<double>(vocab_size, 0.0)};
  for (double& w : model.weights.flat()) w = rng.uniform(-0.01, 0.01);
  return model;
}

TrainResult train(const WordModel& model, std::span<const InstanceBag> bags,
                  const TrainOptions& options) {
  check_bags(model, bags);
  if (options.epochs < 1) fail(ErrorCode::parameter, "epochs must be >= 1");
  if (options.step_size < 0.0) fail(ErrorCode::parameter, "step_size must be >= 0");

  TrainResult result{model, {}};
  result.loss_trace.reserve(options.epochs);
  Rng rng(options.seed);

  std::vector<std::size_t> order(bags.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t batch =
      options.batch_size == 0 ? bags.size() : std::min(options.batch_size, bags.size());

  std::vector<InstanceBag> scratch;
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    const double loss = mimll_loss(result.model, bags);
    if (!std::isfinite(loss)) {
      fail(ErrorCode::divergence, "training diverged at epoch " + std::to_string(epoch));
    }
    result.loss_trace.push_back(loss);

    if (batch == bags.size()) {
      const LossGradient g = loss_gradient(result.model, bags);
      auto w = result.model.weights.flat();
      const auto gw = g.d_weights.flat();
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= options.step_size * gw[i];
      for (std::size_t i = 0; i < result.model.bias.size(); ++i) {
        result.model.bias[i] -= options.step_size * g.d_bias[i];
      }
    } else {
      rng.shuffle(order);
      for (std::size_t start = 0; start < order.size(); start += batch) {
        const std::size_t stop = std::min(start + batch, order.size());
        scratch.clear();
        for (std::size_t i = start; i < stop; ++i) scratch.push_back(bags[order[i]]);
        const LossGradient g = loss_gradient(result.model, scratch);
        if (!std::isfinite(g.loss)) {
          fail(ErrorCode::divergence, "training diverged at epoch " + std::to_string(epoch));
        }
        auto w = result.model.weights.flat();
        const auto gw = g.d_weights.flat();
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= options.step_size * gw[i];
        for (std::size_t i = 0; i < result.model.bias.size(); ++i) {
          result.model.bias[i] -= options.step_size * g.d_bias[i];
        }
      }
    }
  }
  return result;
}

}  // namespace seqsel
