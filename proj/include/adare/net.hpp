#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "adare/dataset.hpp"

namespace adare {

enum class Activation { Relu, Sigmoid, Linear };

const char* activation_name(Activation a);
Activation activation_from_name(std::string_view name);

struct Layer {
  int in_dim = 0;
  int out_dim = 0;
  Vec weights;  // row-major [out_dim][in_dim]
  Vec bias;     // [out_dim]
  Activation activation = Activation::Linear;

  double weight(int out, int in) const {
    return weights[static_cast<size_t>(out) * in_dim + in];
  }
};

// Dense classifier. The last layer must be Linear; its outputs feed a softmax
// head producing the class posterior. Hidden layers are addressed 1-based
// throughout the public API (layer 1 = first hidden layer).
struct FeedforwardNet {
  std::vector<Layer> layers;

  int input_dim() const { return layers.front().in_dim; }
  int num_classes() const { return layers.back().out_dim; }
  int hidden_count() const { return static_cast<int>(layers.size()) - 1; }
};

struct ActivationTrace {
  std::vector<Vec> hidden;  // post-activation vector per hidden layer, in order
  Vec posterior;            // softmax output, sums to 1
};

struct TrainConfig {
  int epochs = 30;
  double learning_rate = 0.1;
  int batch_size = 16;
  uint64_t seed = 1;
  double init_scale = 1.0;
};

void validate_net(const FeedforwardNet& net);

// Weights uniform in [-s, +s] with s = init_scale / sqrt(fan-in); biases zero.
FeedforwardNet make_net(int input_dim, const std::vector<int>& hidden_dims,
                        const std::vector<Activation>& hidden_activations,
                        int num_classes, uint64_t seed, double init_scale = 1.0);

ActivationTrace forward_with_activations(const FeedforwardNet& net,
                                         std::span<const double> x);

// MAP class; ties broken by the lowest class index.
int predict(const FeedforwardNet& net, std::span<const double> x);

enum class GradientObjective {
  ClassPosterior,    // d posterior[klass] / dx
  CrossEntropyLoss,  // d(-ln posterior[klass]) / dx
};

Vec input_gradient(const FeedforwardNet& net, std::span<const double> x,
                   GradientObjective objective, int klass);

// Plain SGD on cross-entropy. Shuffle order and gradient accumulation order
// are fixed, so training is bit-reproducible for a given seed. If
// epoch_mean_ce is non-null it receives the mean training cross-entropy after
// each epoch.
FeedforwardNet train(FeedforwardNet net, const Dataset& data,
                     const TrainConfig& cfg,
                     std::vector<double>* epoch_mean_ce = nullptr);

double mean_cross_entropy(const FeedforwardNet& net, const Dataset& data);
double accuracy(const FeedforwardNet& net, const Dataset& data);

// Per-feature sums of |weight| into the next layer, for hidden layer
// `layer` (1-based). The raw quantity behind the beta feature weights.
Vec outgoing_abs_weight_sums(const FeedforwardNet& net, int layer);

// Shared argmax with the lowest-index tie rule.
int argmax_index(std::span<const double> values);

}  // namespace adare
