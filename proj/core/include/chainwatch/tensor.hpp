#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace chainwatch {

// Dense row-major tensor of 64-bit floats. product(shape) == data.size()
// always holds; every mutating entry point re-checks it cheaply via resize.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, double fill);
    Tensor(std::vector<std::size_t> shape, std::vector<double> values);

    static Tensor matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    static Tensor vector(std::size_t n, double fill = 0.0);
    // 2-D literal, e.g. Tensor::from_rows({{1,0},{0,1}}).
    static Tensor from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static Tensor identity(std::size_t n);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    std::size_t rows() const;
    std::size_t cols() const;

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double& at(std::size_t r, std::size_t c);
    double at(std::size_t r, std::size_t c) const;
    double* row(std::size_t r);
    const double* row(std::size_t r) const;

    void fill(double v);
    void zero() { fill(0.0); }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool all_finite() const;

    // Elementwise updates; shapes must match.
    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor& operator*=(double s);
    // this += alpha * other
    void axpy(double alpha, const Tensor& other);
    // this *= other, elementwise
    void hadamard(const Tensor& other);

    std::string shape_string() const;

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

std::string shape_string(const std::vector<std::size_t>& shape);

// C[i][j] = sum_k A[i][k] B[k][j], terms accumulated in ascending k for every
// output element, so results are bit-reproducible.
Tensor matmul(const Tensor& a, const Tensor& b);

// C += A * B without the intermediate allocation.
void matmul_accumulate(const Tensor& a, const Tensor& b, Tensor& c);

// C += A^T * B. Accumulation over rows of A ascending.
void matmul_at_b_accumulate(const Tensor& a, const Tensor& b, Tensor& c);

// C += A * B^T.
void matmul_a_bt_accumulate(const Tensor& a, const Tensor& b, Tensor& c);

Tensor transpose(const Tensor& m);

}  // namespace chainwatch
