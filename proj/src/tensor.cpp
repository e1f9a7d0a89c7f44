#include "veracity/tensor.hpp"

#include <cmath>
#include <numeric>

#include "veracity/errors.hpp"

namespace veracity {

namespace {

std::size_t checked_count(const std::vector<int>& shape) {
    if (shape.empty() || shape.size() > 3) {
        throw DimensionError("tensor rank must be 1..3, got rank " +
                             std::to_string(shape.size()));
    }
    std::size_t n = 1;
    for (int d : shape) {
        if (d <= 0) {
            throw DimensionError("tensor dimensions must be positive, got " + shape_str(shape));
        }
        n *= static_cast<std::size_t>(d);
    }
    return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    data_.assign(checked_count(shape_), real{0});
}

Tensor::Tensor(std::vector<int> shape, std::vector<real> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_count(shape_) != data_.size()) {
        throw DimensionError("data length " + std::to_string(data_.size()) +
                             " does not match shape " + shape_str(shape_));
    }
}

Tensor Tensor::full(std::vector<int> shape, real value) {
    Tensor t(std::move(shape));
    t.fill(value);
    return t;
}

Tensor Tensor::vector(std::vector<real> values) {
    const int n = static_cast<int>(values.size());
    return Tensor({n}, std::move(values));
}

Tensor Tensor::matrix(int rows, int cols, std::vector<real> values) {
    return Tensor({rows, cols}, std::move(values));
}

Tensor Tensor::uniform(std::vector<int> shape, Rng& rng, real lo, real hi) {
    Tensor t(std::move(shape));
    for (int i = 0; i < t.size(); ++i) {
        t[i] = static_cast<real>(rng.uniform(lo, hi));
    }
    return t;
}

void Tensor::fill(real value) {
    std::fill(data_.begin(), data_.end(), value);
}

bool Tensor::all_finite() const {
    for (real v : data_) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

std::string shape_str(const std::vector<int>& shape) {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i != 0) {
            s += " x ";
        }
        s += std::to_string(shape[i]);
    }
    return s + "]";
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2) {
        throw DimensionError("matmul expects rank-2 tensors, got " + shape_str(a) + " and " +
                             shape_str(b));
    }
    if (a.dim(1) != b.dim(0)) {
        throw DimensionError("matmul inner dimensions differ: " + shape_str(a) + " vs " +
                             shape_str(b));
    }
    const int m = a.dim(0);
    const int n = a.dim(1);
    const int p = b.dim(1);
    Tensor out({m, p});
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < n; ++k) {
            const real av = a.at(i, k);
            if (av == real{0}) {
                continue;
            }
            const real* brow = b.data() + static_cast<std::size_t>(k) * p;
            real* orow = out.data() + static_cast<std::size_t>(i) * p;
            for (int j = 0; j < p; ++j) {
                orow[j] += av * brow[j];
            }
        }
    }
    return out;
}

Tensor matvec(const Tensor& m, const Tensor& x) {
    if (m.rank() != 2 || x.rank() != 1) {
        throw DimensionError("matvec expects matrix and vector, got " + shape_str(m) + " and " +
                             shape_str(x));
    }
    if (m.dim(1) != x.dim(0)) {
        throw DimensionError("matvec dimensions differ: " + shape_str(m) + " vs " + shape_str(x));
    }
    const int rows = m.dim(0);
    const int cols = m.dim(1);
    Tensor out({rows});
    for (int i = 0; i < rows; ++i) {
        const real* mrow = m.data() + static_cast<std::size_t>(i) * cols;
        real acc = 0;
        for (int j = 0; j < cols; ++j) {
            acc += mrow[j] * x[j];
        }
        out[i] = acc;
    }
    return out;
}

Tensor matvec_transposed(const Tensor& m, const Tensor& y) {
    if (m.rank() != 2 || y.rank() != 1) {
        throw DimensionError("matvec_transposed expects matrix and vector, got " + shape_str(m) +
                             " and " + shape_str(y));
    }
    if (m.dim(0) != y.dim(0)) {
        throw DimensionError("matvec_transposed dimensions differ: " + shape_str(m) + " vs " +
                             shape_str(y));
    }
    const int rows = m.dim(0);
    const int cols = m.dim(1);
    Tensor out({cols});
    for (int i = 0; i < rows; ++i) {
        const real yi = y[i];
        if (yi == real{0}) {
            continue;
        }
        const real* mrow = m.data() + static_cast<std::size_t>(i) * cols;
        for (int j = 0; j < cols; ++j) {
            out[j] += mrow[j] * yi;
        }
    }
    return out;
}

Tensor elementwise(Ewise op, const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) {
        throw DimensionError("elementwise shapes differ: " + shape_str(a) + " vs " + shape_str(b));
    }
    Tensor out(a.shape());
    switch (op) {
        case Ewise::add:
            for (int i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
            break;
        case Ewise::sub:
            for (int i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
            break;
        case Ewise::mul:
            for (int i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
            break;
    }
    return out;
}

real sigmoid(real x) {
    if (x >= real{0}) {
        return real{1} / (real{1} + std::exp(-x));
    }
    const real e = std::exp(x);
    return e / (real{1} + e);
}

real act_apply(Act f, real x) {
    switch (f) {
        case Act::sigmoid:
            return sigmoid(x);
        case Act::tanh:
            return std::tanh(x);
        case Act::relu:
            return x > real{0} ? x : real{0};
    }
    return x;
}

Tensor activate(Act f, const Tensor& x) {
    Tensor out(x.shape());
    for (int i = 0; i < x.size(); ++i) {
        out[i] = act_apply(f, x[i]);
    }
    return out;
}

Tensor concat(const std::vector<Tensor>& tensors, int axis) {
    if (tensors.empty()) {
        throw ArgumentError("concat of zero tensors");
    }
    const int rank = tensors.front().rank();
    if (axis < 0 || axis >= rank) {
        throw DimensionError("concat axis " + std::to_string(axis) + " out of range for rank " +
                             std::to_string(rank));
    }
    std::vector<int> out_shape = tensors.front().shape();
    for (std::size_t t = 1; t < tensors.size(); ++t) {
        const Tensor& cur = tensors[t];
        if (cur.rank() != rank) {
            throw DimensionError("concat rank mismatch: " + shape_str(tensors.front()) + " vs " +
                                 shape_str(cur));
        }
        for (int ax = 0; ax < rank; ++ax) {
            if (ax != axis && cur.dim(ax) != tensors.front().dim(ax)) {
                throw DimensionError("concat shapes incompatible off axis " + std::to_string(axis) +
                                     ": " + shape_str(tensors.front()) + " vs " + shape_str(cur));
            }
        }
        out_shape[static_cast<std::size_t>(axis)] += cur.dim(axis);
    }

    // Copy block-wise: `outer` runs over dims before the axis, `inner` over
    // the contiguous tail including the axis itself.
    Tensor out(out_shape);
    int outer = 1;
    for (int ax = 0; ax < axis; ++ax) {
        outer *= out.dim(ax);
    }
    int tail = 1;
    for (int ax = axis + 1; ax < rank; ++ax) {
        tail *= out.dim(ax);
    }
    const int out_row = out.dim(axis) * tail;
    int offset = 0;
    for (const Tensor& cur : tensors) {
        const int cur_row = cur.dim(axis) * tail;
        for (int o = 0; o < outer; ++o) {
            const real* src = cur.data() + static_cast<std::size_t>(o) * cur_row;
            real* dst = out.data() + static_cast<std::size_t>(o) * out_row + offset;
            std::copy(src, src + cur_row, dst);
        }
        offset += cur_row;
    }
    return out;
}

Tensor slice(const Tensor& t, int axis, int start, int len) {
    if (axis < 0 || axis >= t.rank()) {
        throw DimensionError("slice axis " + std::to_string(axis) + " out of range for rank " +
                             std::to_string(t.rank()));
    }
    if (len <= 0 || start < 0 || start + len > t.dim(axis)) {
        throw DimensionError("slice [" + std::to_string(start) + ", " +
                             std::to_string(start + len) + ") out of range for axis size " +
                             std::to_string(t.dim(axis)));
    }
    std::vector<int> out_shape = t.shape();
    out_shape[static_cast<std::size_t>(axis)] = len;
    Tensor out(out_shape);

    int outer = 1;
    for (int ax = 0; ax < axis; ++ax) {
        outer *= t.dim(ax);
    }
    int tail = 1;
    for (int ax = axis + 1; ax < t.rank(); ++ax) {
        tail *= t.dim(ax);
    }
    const int src_row = t.dim(axis) * tail;
    const int dst_row = len * tail;
    for (int o = 0; o < outer; ++o) {
        const real* src = t.data() + static_cast<std::size_t>(o) * src_row + start * tail;
        real* dst = out.data() + static_cast<std::size_t>(o) * dst_row;
        std::copy(src, src + dst_row, dst);
    }
    return out;
}

}  // namespace veracity
