#ifndef MUSHROOM_NET_HPP
#define MUSHROOM_NET_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mushroom/matrix.hpp"

// The shallow expansion network: a fixed sparse fan-out from the input layer
// into a large hidden layer, a binary k-winners-take-all hidden code, and a
// dense plastic readout with optional one-step subtractive cross-inhibition.

namespace mushroom {

struct NetConfig {
    int n_in = 784;
    int n_hidden = 1000;
    int n_out = 10;
    int fan_in = 32;
    int k_active = 50;
    double gamma = 0.0; // lateral inhibition strength, 0 = off

    void validate() const;
};

// Per-hidden-unit input indices, fan_in each, drawn without replacement.
struct Projection {
    int n_in = 0;
    int n_hidden = 0;
    int fan_in = 0;
    std::vector<std::uint16_t> connections; // n_hidden * fan_in, row-major

    std::span<const std::uint16_t> unit(int j) const {
        return {connections.data() + static_cast<std::size_t>(j) * fan_in,
                static_cast<std::size_t>(fan_in)};
    }
};

Projection build_projection(const NetConfig& cfg, std::uint64_t seed);

// Binary hidden code: the k largest pre-activations win, ties to lower index.
Vec encode(std::span<const float> image, const Projection& proj, int k);

// x_o_j = max(0, z_j - gamma * mean(z)) with z = W^T x_e / k_active.
Vec forward(const Vec& x_e, const Matrix& weights, const NetConfig& cfg);

// Argmax readout, ties to the lowest index.
int predict(const Vec& x_o);

} // namespace mushroom

#endif
