#include "chainwatch/gradcheck.hpp"

#include <algorithm>
#include <cmath>

#include "chainwatch/error.hpp"

namespace chainwatch {

Tensor finite_diff_grad(const std::function<double(const Tensor&)>& f, const Tensor& x,
                        double h) {
    Tensor grad(x.shape());
    Tensor probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double original = probe[i];
        probe[i] = original + h;
        const double up = f(probe);
        probe[i] = original - h;
        const double down = f(probe);
        probe[i] = original;
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

double max_relative_error(const Tensor& analytic, const Tensor& numeric, double floor) {
    if (!analytic.same_shape(numeric)) {
        throw ShapeError("max_relative_error: shapes " + analytic.shape_string() + " and " +
                         numeric.shape_string() + " differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        const double denom = std::max({std::fabs(analytic[i]), std::fabs(numeric[i]), floor});
        worst = std::max(worst, std::fabs(analytic[i] - numeric[i]) / denom);
    }
    return worst;
}

}  // namespace chainwatch
