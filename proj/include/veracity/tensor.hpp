#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "veracity/rng.hpp"

namespace veracity {

// Scalar type of all layer math. Double by default; gradient checks rely
// on it. Define VERACITY_SINGLE_PRECISION to trade accuracy for speed.
#ifdef VERACITY_SINGLE_PRECISION
using real = float;
#else
using real = double;
#endif

// Dense row-major tensor of rank 1..3. Value type: copy/move freely.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<int> shape);
    Tensor(std::vector<int> shape, std::vector<real> data);

    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int> shape, real value);
    static Tensor vector(std::vector<real> values);
    static Tensor matrix(int rows, int cols, std::vector<real> values);
    // Uniform in [lo, hi), filled in row-major order from `rng`.
    static Tensor uniform(std::vector<int> shape, Rng& rng, real lo, real hi);

    int rank() const { return static_cast<int>(shape_.size()); }
    const std::vector<int>& shape() const { return shape_; }
    int dim(int axis) const { return shape_[static_cast<std::size_t>(axis)]; }
    int size() const { return static_cast<int>(data_.size()); }
    bool empty() const { return data_.empty(); }

    real& at(int i) {
        assert(rank() == 1);
        return data_[static_cast<std::size_t>(i)];
    }
    real at(int i) const {
        assert(rank() == 1);
        return data_[static_cast<std::size_t>(i)];
    }
    real& at(int i, int j) {
        assert(rank() == 2);
        return data_[static_cast<std::size_t>(i * shape_[1] + j)];
    }
    real at(int i, int j) const {
        assert(rank() == 2);
        return data_[static_cast<std::size_t>(i * shape_[1] + j)];
    }
    real& at(int i, int j, int k) {
        assert(rank() == 3);
        return data_[static_cast<std::size_t>((i * shape_[1] + j) * shape_[2] + k)];
    }
    real at(int i, int j, int k) const {
        assert(rank() == 3);
        return data_[static_cast<std::size_t>((i * shape_[1] + j) * shape_[2] + k)];
    }

    // Flat element access, row-major.
    real& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }
    real operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }

    real* data() { return data_.data(); }
    const real* data() const { return data_.data(); }

    void fill(real value);
    bool all_finite() const;
    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

private:
    std::vector<int> shape_;
    std::vector<real> data_;
};

std::string shape_str(const std::vector<int>& shape);
inline std::string shape_str(const Tensor& t) { return shape_str(t.shape()); }

// Standard matrix product of two rank-2 tensors.
Tensor matmul(const Tensor& a, const Tensor& b);
// y = M^T x for M rank-2 [m x n], x rank-1 [m]; used by every backward pass.
Tensor matvec(const Tensor& m, const Tensor& x);
Tensor matvec_transposed(const Tensor& m, const Tensor& y);

enum class Ewise { add, sub, mul };
Tensor elementwise(Ewise op, const Tensor& a, const Tensor& b);
inline Tensor add(const Tensor& a, const Tensor& b) { return elementwise(Ewise::add, a, b); }
inline Tensor sub(const Tensor& a, const Tensor& b) { return elementwise(Ewise::sub, a, b); }
inline Tensor mul(const Tensor& a, const Tensor& b) { return elementwise(Ewise::mul, a, b); }

enum class Act { sigmoid, tanh, relu };
// Overflow-safe scalar sigmoid: branches on sign so exp never overflows.
real sigmoid(real x);
real act_apply(Act f, real x);
Tensor activate(Act f, const Tensor& x);

Tensor concat(const std::vector<Tensor>& tensors, int axis);
// Inverse of concat: length `len` window starting at `start` along `axis`.
Tensor slice(const Tensor& t, int axis, int start, int len);

}  // namespace veracity
