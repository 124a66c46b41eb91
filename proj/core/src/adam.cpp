#include "chainwatch/adam.hpp"

#include <cmath>

#include "chainwatch/error.hpp"

namespace chainwatch {

AdamState AdamState::for_param(const Tensor& param, double learning_rate) {
    AdamState s;
    s.first_moment = Tensor(param.shape());
    s.second_moment = Tensor(param.shape());
    s.learning_rate = learning_rate;
    return s;
}

void adam_step(Tensor& param, const Tensor& grad, AdamState& state) {
    if (!param.same_shape(grad) || !param.same_shape(state.first_moment)) {
        throw ShapeError("adam_step: param " + param.shape_string() + ", grad " +
                         grad.shape_string() + ", moments " +
                         state.first_moment.shape_string() + " must agree");
    }
    state.step += 1;
    const double b1 = state.beta1, b2 = state.beta2;
    const double corr1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
    const double corr2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
    double* p = param.data();
    const double* g = grad.data();
    double* m = state.first_moment.data();
    double* v = state.second_moment.data();
    for (std::size_t i = 0; i < param.size(); ++i) {
        m[i] = b1 * m[i] + (1.0 - b1) * g[i];
        v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
        const double m_hat = m[i] / corr1;
        const double v_hat = v[i] / corr2;
        p[i] -= state.learning_rate * m_hat / (std::sqrt(v_hat) + state.epsilon);
    }
}

}  // namespace chainwatch
