#include "mushroom/net.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mushroom/errors.hpp"
#include "mushroom/rng.hpp"

namespace mushroom {

void NetConfig::validate() const {
    std::ostringstream os;
    if (n_in < 1 || n_hidden < 1 || n_out < 1) {
        os << "layer sizes must be positive (n_in=" << n_in << ", n_hidden=" << n_hidden
           << ", n_out=" << n_out << ")";
        throw std::invalid_argument(os.str());
    }
    if (fan_in < 1 || fan_in > n_in) {
        os << "fan_in=" << fan_in << " outside [1, n_in=" << n_in << "]";
        throw std::invalid_argument(os.str());
    }
    if (k_active < 1 || k_active > n_hidden) {
        os << "k_active=" << k_active << " outside [1, n_hidden=" << n_hidden << "]";
        throw std::invalid_argument(os.str());
    }
    if (n_in > 65536)
        throw std::invalid_argument("n_in exceeds the 16-bit projection index range");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
}

Projection build_projection(const NetConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    Projection proj;
    proj.n_in = cfg.n_in;
    proj.n_hidden = cfg.n_hidden;
    proj.fan_in = cfg.fan_in;
    proj.connections.reserve(std::size_t(cfg.n_hidden) * cfg.fan_in);
    Rng rng = make_rng(seed);
    for (int j = 0; j < cfg.n_hidden; ++j) {
        auto idx = sample_without_replacement(rng, std::uint32_t(cfg.n_in),
                                              std::uint32_t(cfg.fan_in));
        for (auto i : idx) proj.connections.push_back(std::uint16_t(i));
    }
    return proj;
}

Vec encode(std::span<const float> image, const Projection& proj, int k) {
    if (int(image.size()) != proj.n_in) {
        std::ostringstream os;
        os << "encode: image size " << image.size() << " != n_in " << proj.n_in;
        throw std::invalid_argument(os.str());
    }
    if (k < 1 || k > proj.n_hidden)
        throw std::invalid_argument("encode: k outside [1, n_hidden]");

    std::vector<double> h(proj.n_hidden);
    const std::uint16_t* conn = proj.connections.data();
    for (int j = 0; j < proj.n_hidden; ++j) {
        double sum = 0.0;
        for (int c = 0; c < proj.fan_in; ++c) sum += image[conn[c]];
        conn += proj.fan_in;
        h[j] = sum;
    }

    std::vector<int> order(proj.n_hidden);
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](int a, int b) { return h[a] > h[b] || (h[a] == h[b] && a < b); });

    Vec x_e(proj.n_hidden, 0.0);
    for (int i = 0; i < k; ++i) x_e[order[i]] = 1.0;
    return x_e;
}

Vec forward(const Vec& x_e, const Matrix& weights, const NetConfig& cfg) {
    if (int(x_e.size()) != weights.rows || weights.cols != cfg.n_out)
        throw std::invalid_argument("forward: shape mismatch between code and weights");

    Vec z(cfg.n_out, 0.0);
    for (int i = 0; i < weights.rows; ++i) {
        if (x_e[i] == 0.0) continue;
        const double* w = weights.row(i);
        for (int j = 0; j < cfg.n_out; ++j) z[j] += w[j];
    }
    double inv_k = 1.0 / double(cfg.k_active);
    double mean = 0.0;
    for (int j = 0; j < cfg.n_out; ++j) {
        z[j] *= inv_k;
        if (!std::isfinite(z[j])) throw NumericError("forward: non-finite output drive");
        mean += z[j];
    }
    mean /= double(cfg.n_out);

    Vec x_o(cfg.n_out);
    for (int j = 0; j < cfg.n_out; ++j)
        x_o[j] = std::max(0.0, z[j] - cfg.gamma * mean);
    return x_o;
}

int predict(const Vec& x_o) {
    if (x_o.empty()) throw std::invalid_argument("predict: empty output activity");
    int best = 0;
    for (int j = 1; j < int(x_o.size()); ++j)
        if (x_o[j] > x_o[best]) best = j;
    return best;
}

} // namespace mushroom
