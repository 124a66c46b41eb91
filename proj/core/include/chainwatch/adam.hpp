#pragma once

#include <cstdint>

#include "chainwatch/tensor.hpp"

namespace chainwatch {

// Per-parameter Adam optimizer state with bias correction.
struct AdamState {
    std::int64_t step = 0;
    Tensor first_moment;
    Tensor second_moment;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    static AdamState for_param(const Tensor& param, double learning_rate = 1e-3);
};

// One Adam update in place. A zero gradient leaves the parameter unchanged
// while the step counter and moments still advance.
void adam_step(Tensor& param, const Tensor& grad, AdamState& state);

}  // namespace chainwatch
