#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rrf/ndarray.hpp"
#include "rrf/rng.hpp"

namespace rrf {

// Twice continuously differentiable nonlinearities. The gradient-alignment
// loss differentiates through input-gradients, so every activation must
// supply its second derivative as well.
enum class Activation { Tanh, Mish, Softplus };

Activation activation_from_name(const std::string& name);
std::string activation_name(Activation a);

double act_value(Activation a, double x);
double act_prime(Activation a, double x);
double act_prime2(Activation a, double x);

// Fully connected network. Hidden layers use `activation`; the final
// layer is linear. Weight matrices are (out x in), biases length out.
struct MLPParams {
  struct Layer {
    NDArray w;  // (out x in)
    NDArray b;  // (out)
  };
  std::vector<Layer> layers;
  Activation activation = Activation::Tanh;

  std::size_t input_dim() const;
  std::size_t output_dim() const;
  std::size_t layer_count() const { return layers.size(); }
  std::size_t param_count() const;

  // Throws ShapeError when adjacent layer dimensions do not chain.
  void validate() const;
};

// Uniform(-s, s) weights with s = sqrt(6 / (fan_in + fan_out)), zero biases.
MLPParams make_mlp(std::size_t input_dim, const std::vector<std::size_t>& hidden,
                   std::size_t output_dim, Activation act, Rng& rng);

// Network output for a single input of length input_dim.
NDArray mlp_forward(const MLPParams& p, const NDArray& x);

// Batched output: x is (batch x input_dim), result (batch x output_dim).
NDArray mlp_forward_batch(const MLPParams& p, const NDArray& x);

// Gradient of the scalar output with respect to the input, computed by an
// explicit layer-by-layer chain-rule product. Requires output_dim == 1.
NDArray mlp_input_gradient(const MLPParams& p, const NDArray& x);

// Batched input gradient for a scalar-head network: (batch x input_dim).
NDArray mlp_input_gradient_batch(const MLPParams& p, const NDArray& x);

// Flat views used by the optimizer and checkpoints: tensors in layer
// order, weights before biases.
std::vector<NDArray*> param_tensors(MLPParams& p);
std::vector<const NDArray*> param_tensors(const MLPParams& p);

}  // namespace rrf
