#include "chainwatch/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chainwatch/error.hpp"

namespace chainwatch {

namespace {

std::size_t product(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return n;
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(op) + ": shapes " + a.shape_string() + " and " +
                         b.shape_string() + " differ");
    }
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(product(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, double fill)
    : shape_(std::move(shape)), data_(product(shape_), fill) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
    if (product(shape_) != data_.size()) {
        throw ShapeError("tensor: " + std::to_string(data_.size()) +
                         " values do not fill shape " + shape_string());
    }
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols, double fill) {
    return Tensor({rows, cols}, fill);
}

Tensor Tensor::vector(std::size_t n, double fill) { return Tensor({n}, fill); }

Tensor Tensor::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Tensor out({r, c});
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeError("from_rows: ragged row lengths");
        for (double v : row) out.data_[i++] = v;
    }
    return out;
}

Tensor Tensor::identity(std::size_t n) {
    Tensor out({n, n});
    for (std::size_t i = 0; i < n; ++i) out.data_[i * n + i] = 1.0;
    return out;
}

std::size_t Tensor::rows() const {
    if (rank() != 2) throw ShapeError("rows: tensor " + shape_string() + " is not 2-D");
    return shape_[0];
}

std::size_t Tensor::cols() const {
    if (rank() != 2) throw ShapeError("cols: tensor " + shape_string() + " is not 2-D");
    return shape_[1];
}

double& Tensor::at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }

double Tensor::at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

double* Tensor::row(std::size_t r) { return data_.data() + r * cols(); }

const double* Tensor::row(std::size_t r) const { return data_.data() + r * cols(); }

void Tensor::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

bool Tensor::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

Tensor& Tensor::operator+=(const Tensor& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
    require_same_shape(*this, other, "sub");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Tensor& Tensor::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

void Tensor::axpy(double alpha, const Tensor& other) {
    require_same_shape(*this, other, "axpy");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += alpha * other.data_[i];
}

void Tensor::hadamard(const Tensor& other) {
    require_same_shape(*this, other, "hadamard");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] *= other.data_[i];
}

std::string Tensor::shape_string() const { return chainwatch::shape_string(shape_); }

std::string shape_string(const std::vector<std::size_t>& shape) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << 'x';
        os << shape[i];
    }
    os << ']';
    return os.str();
}

namespace {

void check_matmul(const Tensor& a, const Tensor& b, const char* op) {
    if (a.rank() != 2 || b.rank() != 2 || a.cols() != b.rows()) {
        throw ShapeError(std::string(op) + ": cannot multiply " + a.shape_string() + " by " +
                         b.shape_string());
    }
}

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
    check_matmul(a, b, "matmul");
    Tensor c({a.rows(), b.cols()});
    matmul_accumulate(a, b, c);
    return c;
}

// i-k-j loop order: for each output element the k terms still arrive in
// ascending order, and the inner j loop vectorizes.
void matmul_accumulate(const Tensor& a, const Tensor& b, Tensor& c) {
    check_matmul(a, b, "matmul");
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    if (c.rows() != m || c.cols() != n) {
        throw ShapeError("matmul: output " + c.shape_string() + " does not hold " +
                         shape_string({m, n}));
    }
    const double* pa = a.data();
    const double* pb = b.data();
    double* pc = c.data();
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = pc + i * n;
        const double* arow = pa + i * k;
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double av = arow[kk];
            if (av == 0.0) continue;
            const double* brow = pb + kk * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void matmul_at_b_accumulate(const Tensor& a, const Tensor& b, Tensor& c) {
    if (a.rank() != 2 || b.rank() != 2 || a.rows() != b.rows()) {
        throw ShapeError("matmul_at_b: cannot multiply " + a.shape_string() + "^T by " +
                         b.shape_string());
    }
    const std::size_t m = a.cols(), k = a.rows(), n = b.cols();
    if (c.rows() != m || c.cols() != n) {
        throw ShapeError("matmul_at_b: output " + c.shape_string() + " does not hold " +
                         shape_string({m, n}));
    }
    const double* pa = a.data();
    const double* pb = b.data();
    double* pc = c.data();
    for (std::size_t kk = 0; kk < k; ++kk) {
        const double* arow = pa + kk * m;
        const double* brow = pb + kk * n;
        for (std::size_t i = 0; i < m; ++i) {
            const double av = arow[i];
            if (av == 0.0) continue;
            double* crow = pc + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void matmul_a_bt_accumulate(const Tensor& a, const Tensor& b, Tensor& c) {
    if (a.rank() != 2 || b.rank() != 2 || a.cols() != b.cols()) {
        throw ShapeError("matmul_a_bt: cannot multiply " + a.shape_string() + " by " +
                         b.shape_string() + "^T");
    }
    const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
    if (c.rows() != m || c.cols() != n) {
        throw ShapeError("matmul_a_bt: output " + c.shape_string() + " does not hold " +
                         shape_string({m, n}));
    }
    const double* pa = a.data();
    const double* pb = b.data();
    double* pc = c.data();
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = pa + i * k;
        double* crow = pc + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const double* brow = pb + j * k;
            double acc = 0.0;
            for (std::size_t kk = 0; kk < k; ++kk) acc += arow[kk] * brow[kk];
            crow[j] += acc;
        }
    }
}

Tensor transpose(const Tensor& m) {
    if (m.rank() != 2) throw ShapeError("transpose: tensor " + m.shape_string() + " is not 2-D");
    Tensor out({m.cols(), m.rows()});
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    }
    return out;
}

}  // namespace chainwatch
