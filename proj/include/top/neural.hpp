#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "top/labeling.hpp"

namespace top {

// Network shape: input [d ⊕ chi] (2n) -> h1 linear -> h2.. sigmoid -> softmax
// over the n nodes. The first hidden layer carries no non-linearity; it mimics
// the linear combination -(tau + d/V)/alpha, and the sigmoid layer stands in
// for the exponential.
struct MLPConfig {
    int n = 0;
    std::vector<int> hidden;        // empty => {n, n}
    double dropout_rate = 0.1;      // in [0, 1)
    double dist_scale = 1.0;        // meters; distance block divided by this
    double overstay_scale = 3600.0; // seconds; chi block divided by this
    bool weight_sharing = false;    // tied per-node variant for ablations

    std::vector<int> hidden_sizes() const;
};

struct PolicyModel {
    MLPConfig config;
    std::vector<double> params;  // all weights and biases, flat
};

// Offsets of each layer's weight matrix and bias vector inside the flat
// parameter block. Dense layout: for each layer l with rows r and cols c,
// the weight block is row-major r x c followed by r biases.
struct LayerLayout {
    std::vector<int> sizes;               // in, h..., out
    std::vector<std::size_t> w_offset;
    std::vector<std::size_t> b_offset;
    std::size_t total = 0;
};

LayerLayout layer_layout(const MLPConfig& config);

PolicyModel init_model(const MLPConfig& config, std::uint64_t seed);

// Scales the distance block by dist_scale and the chi block by
// overstay_scale; the -1 idle sentinel passes through unscaled.
std::vector<double> normalize_features(const MLPConfig& config, const std::vector<double>& raw);

struct ForwardCache {
    std::vector<std::vector<double>> pre;     // z per layer (output layer = logits)
    std::vector<std::vector<double>> act;     // activation per layer, before dropout
    std::vector<std::vector<double>> dropped; // activation after dropout (train mode)
    std::vector<std::vector<double>> mask;    // inverted-dropout masks
    std::vector<double> input;
    std::vector<double> probs;
};

class Rng;

// One forward pass on a normalized feature vector.
std::vector<double> forward(const PolicyModel& model, const std::vector<double>& x,
                            bool train_mode, Rng* rng, ForwardCache* cache = nullptr);

struct Batch {
    std::vector<const std::vector<double>*> features;  // normalized
    std::vector<NodeId> labels;
};

// Mean cross-entropy over the batch plus gradients of the flat parameters.
double loss_and_grad(const PolicyModel& model, const Batch& batch, bool train_mode,
                     Rng* rng, std::vector<double>& grad_out);

struct AdamState {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    long long step = 0;
    std::vector<double> m;
    std::vector<double> v;

    explicit AdamState(std::size_t param_count, double learning_rate = 1e-3)
        : lr(learning_rate), m(param_count, 0.0), v(param_count, 0.0) {}
};

void adam_step(std::vector<double>& params, const std::vector<double>& grads, AdamState& state);

struct TrainHyper {
    double lr = 1e-3;
    int batch_size = 64;
    int max_epochs = 200;
    int patience = 10;
    std::uint64_t seed = 1;
};

struct TrainReport {
    std::vector<double> train_loss;
    std::vector<double> val_loss;
    std::vector<double> val_accuracy;
    int best_epoch = 0;     // 1-based
    int stopped_epoch = 0;  // 1-based
};

struct TrainResult {
    PolicyModel model;
    TrainReport report;
};

// Mini-batch Adam with seeded shuffling, dropout, and early stopping on
// validation loss; returns the parameters of the best validation epoch.
TrainResult train(const LabelledDataset& train_set, const LabelledDataset& val_set,
                  MLPConfig config, const TrainHyper& hyper);

// Argmax class on raw (unnormalized) features; `mask`, when given, restricts
// the argmax to flagged nodes. Ties go to the lowest index.
NodeId predict_next(const PolicyModel& model, const std::vector<double>& raw_features,
                    const std::vector<char>* mask = nullptr);

// Worst relative error between analytic and central-difference gradients,
// with the relative-error convention |a-b| / max(1, |a|, |b|).
double grad_check(const PolicyModel& model, const Batch& batch, double epsilon);

}  // namespace top
