#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gw/types.hpp"

namespace gw {

struct CnnConfig {
  int input_len = 1500;
  int n_classes = 4;
  int filters = 16;
  int kernel = 3;
  int pool = 2;
  int hidden = 16;  // dense1 width; doubles as the feature dimension
  double dropout_rate = 0.2;  // applied after pooling, training only

  int conv_out() const { return input_len - kernel + 1; }
  int pool_out() const { return conv_out() / pool; }
  int flatten() const { return filters * pool_out(); }
  std::size_t conv_params() const { return static_cast<std::size_t>(filters) * (kernel + 1); }
  std::size_t dense1_params() const { return static_cast<std::size_t>(flatten() + 1) * hidden; }
  std::size_t dense2_params() const { return static_cast<std::size_t>(hidden + 1) * n_classes; }
  std::size_t total_params() const { return conv_params() + dense1_params() + dense2_params(); }
  void validate() const;
};

// Conv1D(valid, stride 1) -> ReLU -> MaxPool(2) -> Dropout -> Flatten ->
// Dense+ReLU (features) -> Dense+sigmoid (per-class probabilities).
struct CnnModel {
  CnnConfig cfg;
  std::vector<double> conv_w;  // [filters][kernel]
  std::vector<double> conv_b;  // [filters]
  std::vector<double> w1;      // [flatten][hidden], row-major
  std::vector<double> b1;      // [hidden]
  std::vector<double> w2;      // [hidden][n_classes], row-major
  std::vector<double> b2;      // [n_classes]

  static CnnModel init(const CnnConfig& cfg, std::uint64_t seed);
  void save(const std::string& path) const;
  static CnnModel load(const std::string& path);
  void write_summary(const std::string& path) const;
};

struct CnnGradients {
  std::vector<double> conv_w, conv_b, w1, b1, w2, b2;

  static CnnGradients zeros(const CnnConfig& cfg);
};

struct ForwardResult {
  std::vector<double> features;  // post-ReLU dense1 activations
  std::vector<double> probs;     // per-class sigmoid outputs (not normalized)
};

struct BatchStats {
  double mean_loss = 0.0;
  int correct = 0;
};

// One labeled sample: waveform plus class index in [0, n_classes).
struct LabeledSample {
  const Waveform* w = nullptr;
  int cls = 0;
};

ForwardResult cnn_forward(const CnnModel& m, const Waveform& w, bool training,
                          std::uint64_t seed);
std::vector<double> extract_features(const CnnModel& m, const Waveform& w);

double bce_loss(std::span<const double> probs, std::span<const double> one_hot);

// Forward (and optionally backward) over a batch. Dropout masks are derived
// per sample from mask_seed, so gradients and the finite-difference loss of
// the same call are consistent. Gradients are those of the mean batch loss.
BatchStats cnn_batch(const CnnModel& m, std::span<const LabeledSample> batch, bool training,
                     std::uint64_t mask_seed, CnnGradients* grads,
                     std::vector<double>* probs_out = nullptr);

namespace ref {
// Serial reference implementation, kept independent of the OpenMP path and
// compared bit-for-bit in the test suite.
BatchStats cnn_batch_serial(const CnnModel& m, std::span<const LabeledSample> batch, bool training,
                            std::uint64_t mask_seed, CnnGradients* grads,
                            std::vector<double>* probs_out = nullptr);
}  // namespace ref

struct AdamState {
  std::vector<double> m, v;
  long t = 0;

  static AdamState zeros(const CnnConfig& cfg);
};

struct TrainConfig {
  double learning_rate = 1e-7;
  int batch_size = 64;
  int epochs = 200;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double dropout_rate = 0.2;
  double split_train = 0.75;
  double split_test = 0.20;
  double split_val = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

void adam_step(CnnModel& m, const CnnGradients& g, AdamState& state, const TrainConfig& cfg);

struct EpochStats {
  double train_loss = 0.0, train_accuracy = 0.0;
  double test_loss = 0.0, test_accuracy = 0.0;
  double val_loss = 0.0;
};

struct TrainResult {
  CnnModel model;  // best-by-validation snapshot
  std::vector<EpochStats> history;
  int best_epoch = -1;
};

TrainResult train(std::span<const LabeledSample> dataset, const CnnConfig& arch,
                  const TrainConfig& cfg);

std::vector<LabeledSample> label_by_argmax(std::span<const Waveform> data, int n_classes);

}  // namespace gw
