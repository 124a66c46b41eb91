#pragma once

#include <functional>

#include "chainwatch/tensor.hpp"

namespace chainwatch {

// Central-difference gradient of a scalar function: one (f(x+h e_i) -
// f(x-h e_i)) / 2h evaluation per coordinate.
Tensor finite_diff_grad(const std::function<double(const Tensor&)>& f, const Tensor& x,
                        double h = 1e-5);

// max_i |a_i - b_i| / max(|a_i|, |b_i|, floor). The floor keeps near-zero
// coordinates from blowing the ratio up on finite-difference noise.
double max_relative_error(const Tensor& analytic, const Tensor& numeric, double floor = 1e-6);

}  // namespace chainwatch
