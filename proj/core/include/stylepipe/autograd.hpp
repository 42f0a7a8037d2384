/**
 * @file autograd.hpp
 * @brief Define-by-run reverse-mode automatic differentiation on Tensor.
 *
 * Each op computes its value eagerly and records a closure that scatters the
 * output gradient back to its inputs. Graphs are DAGs of shared_ptr nodes;
 * leaves (network parameters) outlive the graphs built per forward pass, so
 * gradients accumulate across a mini-batch until explicitly cleared.
 */
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "stylepipe/tensor.hpp"

namespace stylepipe::ag {

enum class Padding { Zero, Reflect };  // Reflect is reflect-101 (no edge repeat)

class Node;
using Value = std::shared_ptr<Node>;

class Node {
public:
    Tensor value;
    Tensor grad;  // allocated on first accumulation
    bool requires_grad = false;
    std::string label;
    std::vector<Value> inputs;
    std::function<void(Node&)> backward_fn;

    bool has_grad() const { return !grad.empty(); }
    void accumulate(const Tensor& g);
    void zero_grad() { grad = Tensor(); }
};

/// Wrap a tensor as a non-trainable graph input.
Value constant(Tensor v, std::string label = {});

/// Wrap a tensor as a trainable leaf (gradient target).
Value parameter(Tensor v, std::string label = {});

// ---------------------------------------------------------------------------
// Ops. All inputs/outputs are (C,H,W) tensors unless stated otherwise.
// ---------------------------------------------------------------------------

/// 2-D convolution, "same" geometry: pad = kernel/2 per side, then stride.
/// x: (Cin,H,W); w: (Cout,Cin,Kh,Kw) with odd Kh,Kw; b: (Cout) or nullptr.
Value conv2d(const Value& x, const Value& w, const Value& b, std::size_t stride, Padding pad);

/// Per-channel normalisation over the spatial extent, then affine.
Value instance_norm(const Value& x, const Value& gamma, const Value& beta, double eps = 1e-5);

Value relu(const Value& x);
Value add(const Value& a, const Value& b);
Value sub(const Value& a, const Value& b);
Value scale(const Value& a, double s);

/// Nearest-neighbour 2x upsampling.
Value upsample_nearest2(const Value& x);

/// 2x2 max pooling with stride 2 (spatial dims must be even).
Value max_pool2(const Value& x);

/// Channel-correlation matrix: (C,H,W) -> (C,C), normalised by C*H*W.
Value gram(const Value& features);

/// Scalar mean of squared elementwise differences.
Value mean_sq_diff(const Value& a, const Value& b);

/// y[o] = sum_i weights(o,i) * x[i] across channels; weights is (Cout,Cin).
Value channel_mix(const Value& x, const Tensor& weights);

/// Per-channel affine y[c] = a[c] * x[c] + b[c] with fixed coefficients.
Value channel_affine(const Value& x, const std::vector<double>& a, const std::vector<double>& b);

/// Min-max normalisation to [0,1] over the whole tensor; constant input -> 0.5.
Value minmax_unit(const Value& x);

/// Weighted sum of scalar nodes (each of size 1) -> scalar.
Value weighted_sum(const std::vector<Value>& terms, const std::vector<double>& weights);

/// Reverse-mode sweep from a scalar root; accumulates into leaf gradients.
void backward(const Value& root);

}  // namespace stylepipe::ag
