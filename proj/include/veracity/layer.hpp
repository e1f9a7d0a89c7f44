#pragma once

#include <string>
#include <vector>

#include "veracity/tensor.hpp"

namespace veracity {

// Named view into one parameter tensor and its gradient accumulator.
// Gradient shape always equals parameter shape.
struct ParamView {
    std::string name;
    Tensor* value = nullptr;
    Tensor* grad = nullptr;
};

// A layer owns its parameters and the activation cache of the last
// forward pass. backward() may only be called after a matching forward().
class Layer {
public:
    virtual ~Layer() = default;

    virtual Tensor forward(const Tensor& input) = 0;
    // Returns d(loss)/d(input) and accumulates parameter gradients.
    virtual Tensor backward(const Tensor& upstream) = 0;
    virtual std::vector<ParamView> parameters() { return {}; }

    void zero_grads() {
        for (ParamView& p : parameters()) {
            p.grad->fill(0);
        }
    }
};

enum class DenseAct { linear, relu, sigmoid, tanh };

// Fully connected layer y = act(W x [+ b]) over rank-1 inputs.
class DenseLayer : public Layer {
public:
    DenseLayer(std::string name, int out_dim, int in_dim, bool use_bias, DenseAct act);

    void init(Rng& rng);

    Tensor forward(const Tensor& input) override;
    Tensor backward(const Tensor& upstream) override;
    // Backward entry for callers that already hold d(loss)/d(preactivation),
    // e.g. the fused sigmoid + cross-entropy path.
    Tensor backward_preact(const Tensor& dz);
    std::vector<ParamView> parameters() override;

    int out_dim() const { return weight.dim(0); }
    int in_dim() const { return weight.dim(1); }

    Tensor weight;       // [out x in]
    Tensor weight_grad;
    Tensor bias;         // [out], unused when !use_bias_
    Tensor bias_grad;

private:
    std::string name_;
    bool use_bias_;
    DenseAct act_;
    Tensor cached_input_;
    Tensor cached_preact_;
    bool has_forward_ = false;
};

}  // namespace veracity
