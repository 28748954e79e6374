#include "mushroom/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mushroom {

namespace {
const std::array<std::string, 3> kAcqNames = {"EI", "PI", "LCB"};
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
} // namespace

const std::string& acquisition_name(Acquisition a) {
    return kAcqNames[static_cast<std::size_t>(a)];
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double expected_improvement(double mean, double spread, double f_best) {
    double delta = f_best - mean;
    if (spread <= 0.0) return std::max(0.0, delta);
    double z = delta / spread;
    return delta * normal_cdf(z) + spread * normal_pdf(z);
}

double probability_of_improvement(double mean, double spread, double f_best) {
    if (spread <= 0.0) return mean < f_best ? 1.0 : 0.0;
    return normal_cdf((f_best - mean) / spread);
}

double lower_confidence_bound(double mean, double spread, double kappa) {
    return mean - kappa * spread;
}

std::array<double, 3> HedgeState::probabilities() const {
    std::array<double, 3> p;
    double top = std::max({gains[0], gains[1], gains[2]});
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        p[i] = std::exp(eta * (gains[i] - top));
        sum += p[i];
    }
    for (auto& v : p) v /= sum;
    return p;
}

Acquisition hedge_select(HedgeState& state) {
    auto p = state.probabilities();
    double u = uniform01(state.rng);
    double cum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        cum += p[i];
        if (u < cum) return static_cast<Acquisition>(i);
    }
    return Acquisition::LCB; // u landed on accumulated rounding
}

void hedge_update(HedgeState& state, Acquisition chosen, double reward) {
    auto i = static_cast<std::size_t>(chosen);
    if (i >= state.gains.size()) throw std::invalid_argument("hedge_update: bad acquisition id");
    state.gains[i] += reward;
}

Proposal propose(const ForestModel& model, const SearchSpaceDef& space, double f_best,
                 HedgeState& hedge, int pool_size, Rng& rng, double kappa) {
    if (pool_size < 1) throw std::invalid_argument("propose: pool_size must be >= 1");

    Acquisition acq = hedge_select(hedge);
    bool maximize = acq != Acquisition::LCB;

    Proposal best;
    best.acquisition = acq;
    double best_score = 0.0;
    bool have = false;
    for (int c = 0; c < pool_size; ++c) {
        Configuration cand = random_config(space, rng);
        auto [mean, spread] = model.predict(encode_config(cand, space));
        double score = 0.0;
        switch (acq) {
            case Acquisition::EI: score = expected_improvement(mean, spread, f_best); break;
            case Acquisition::PI: score = probability_of_improvement(mean, spread, f_best); break;
            case Acquisition::LCB: score = lower_confidence_bound(mean, spread, kappa); break;
        }
        bool better = !have || (maximize ? score > best_score : score < best_score);
        if (better) {
            best.config = cand;
            best.predicted_mean = mean;
            best_score = score;
            have = true;
        }
    }
    return best;
}

} // namespace mushroom
