#include "chainwatch/ops.hpp"

#include <cmath>
#include <string>

#include "chainwatch/error.hpp"

namespace chainwatch {

const char* activation_name(Activation a) {
    switch (a) {
        case Activation::Linear: return "linear";
        case Activation::Sigmoid: return "sigmoid";
        case Activation::Tanh: return "tanh";
        case Activation::Relu: return "relu";
    }
    return "?";
}

double sigmoid(double x) {
    // Split on sign so exp() never overflows.
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

Tensor activate(const Tensor& x, Activation kind) {
    Tensor out = x;
    activate_inplace(out, kind);
    return out;
}

void activate_inplace(Tensor& x, Activation kind) {
    double* p = x.data();
    const std::size_t n = x.size();
    switch (kind) {
        case Activation::Linear:
            break;
        case Activation::Sigmoid:
            for (std::size_t i = 0; i < n; ++i) p[i] = sigmoid(p[i]);
            break;
        case Activation::Tanh:
            for (std::size_t i = 0; i < n; ++i) p[i] = std::tanh(p[i]);
            break;
        case Activation::Relu:
            for (std::size_t i = 0; i < n; ++i) p[i] = p[i] > 0.0 ? p[i] : 0.0;
            break;
    }
}

double activation_grad_from_output(Activation kind, double y) {
    switch (kind) {
        case Activation::Linear: return 1.0;
        case Activation::Sigmoid: return y * (1.0 - y);
        case Activation::Tanh: return 1.0 - y * y;
        case Activation::Relu: return y > 0.0 ? 1.0 : 0.0;
    }
    return 0.0;
}

Tensor softmax_rows(const Tensor& logits) {
    const std::size_t n = logits.rows(), c = logits.cols();
    Tensor out({n, c});
    for (std::size_t i = 0; i < n; ++i) {
        const double* in = logits.row(i);
        double* o = out.row(i);
        double mx = in[0];
        for (std::size_t j = 1; j < c; ++j) mx = std::max(mx, in[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            o[j] = std::exp(in[j] - mx);
            sum += o[j];
        }
        for (std::size_t j = 0; j < c; ++j) o[j] /= sum;
    }
    return out;
}

CrossEntropyResult cross_entropy(const Tensor& probs, const std::vector<int>& labels) {
    const std::size_t n = probs.rows(), c = probs.cols();
    if (labels.size() != n) {
        throw ShapeError("cross_entropy: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(n) + " rows");
    }
    CrossEntropyResult result;
    result.grad_logits = probs;
    double loss = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int label = labels[i];
        if (label < 0 || static_cast<std::size_t>(label) >= c) {
            throw ParamError("cross_entropy: label " + std::to_string(label) +
                             " outside [0, " + std::to_string(c) + ") at row " +
                             std::to_string(i));
        }
        const double p = std::max(probs.at(i, static_cast<std::size_t>(label)), 1e-12);
        loss -= std::log(p);
        result.grad_logits.at(i, static_cast<std::size_t>(label)) -= 1.0;
    }
    result.loss = loss * inv_n;
    result.grad_logits *= inv_n;
    return result;
}

Tensor dropout_mask(const std::vector<std::size_t>& shape, double rate, Rng& rng) {
    if (rate < 0.0 || rate >= 1.0) {
        throw ParamError("dropout: rate " + std::to_string(rate) + " outside [0, 1)");
    }
    Tensor mask(shape, 1.0);
    if (rate == 0.0) return mask;
    const double keep_scale = 1.0 / (1.0 - rate);
    for (std::size_t i = 0; i < mask.size(); ++i) {
        mask[i] = rng.uniform() < rate ? 0.0 : keep_scale;
    }
    return mask;
}

Tensor dropout(const Tensor& x, double rate, Rng& rng, bool training) {
    if (rate < 0.0 || rate >= 1.0) {
        throw ParamError("dropout: rate " + std::to_string(rate) + " outside [0, 1)");
    }
    if (!training || rate == 0.0) return x;
    Tensor out = x;
    out.hadamard(dropout_mask(x.shape(), rate, rng));
    return out;
}

Tensor glorot_init(std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows == 0 || cols == 0) throw ParamError("glorot_init: empty dimensions");
    const double bound = std::sqrt(6.0 / static_cast<double>(rows + cols));
    Tensor out({rows, cols});
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = rng.uniform(-bound, bound);
    return out;
}

}  // namespace chainwatch
