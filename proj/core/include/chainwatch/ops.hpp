#pragma once

#include <cstdint>
#include <vector>

#include "chainwatch/rng.hpp"
#include "chainwatch/tensor.hpp"

namespace chainwatch {

enum class Activation { Linear, Sigmoid, Tanh, Relu };

const char* activation_name(Activation a);

double sigmoid(double x);

// Elementwise activation map.
Tensor activate(const Tensor& x, Activation kind);
void activate_inplace(Tensor& x, Activation kind);

// Derivative expressed through the activation output y:
// sigmoid: y(1-y), tanh: 1-y^2, relu: [y > 0], linear: 1.
double activation_grad_from_output(Activation kind, double y);

// Row-wise softmax with max subtraction; each output row sums to 1.
Tensor softmax_rows(const Tensor& logits);

struct CrossEntropyResult {
    double loss = 0.0;       // -mean(log p[i, label_i]), p clamped at 1e-12
    Tensor grad_logits;      // (probs - one_hot) / n
};

CrossEntropyResult cross_entropy(const Tensor& probs, const std::vector<int>& labels);

// Multiplicative inverted-dropout mask: entries are 0 with probability
// `rate`, otherwise 1/(1-rate). Forward and backward both multiply by it.
Tensor dropout_mask(const std::vector<std::size_t>& shape, double rate, Rng& rng);

// training: zero with probability rate, survivors scaled by 1/(1-rate);
// inference: identity.
Tensor dropout(const Tensor& x, double rate, Rng& rng, bool training);

// I.i.d. uniform on +-sqrt(6/(rows+cols)).
Tensor glorot_init(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace chainwatch
