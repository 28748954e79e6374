#include "mushroom/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mushroom {

namespace {

void check_bound(const char* field, double value, double lo, double hi) {
    if (!(value >= lo && value <= hi)) {
        std::ostringstream os;
        os << field << "=" << value << " outside [" << lo << ", " << hi << "]";
        throw std::invalid_argument(os.str());
    }
}

// pow(10, log10(x)) can land one ulp outside the box at its endpoints.
double pow10_clamped(double exponent, double lo, double hi) {
    return std::clamp(std::pow(10.0, exponent), lo, hi);
}

} // namespace

void validate_config(const Configuration& config, const SearchSpaceDef& space) {
    check_bound("alpha", config.params.alpha, space.alpha_lo, space.alpha_hi);
    check_bound("beta1", config.params.beta1, space.beta_lo, space.beta_hi);
    check_bound("beta2", config.params.beta2, space.beta_lo, space.beta_hi);
    check_bound("beta3", config.params.beta3, space.beta_lo, space.beta_hi);
}

std::vector<double> encode_config(const Configuration& config,
                                  const SearchSpaceDef& space) {
    validate_config(config, space);
    std::vector<double> f(SearchSpaceDef::n_features, 0.0);
    f[static_cast<int>(config.rule)] = 1.0;
    f[8] = std::log10(config.params.alpha);
    f[9] = std::log10(config.params.beta1);
    f[10] = std::log10(config.params.beta2);
    f[11] = std::log10(config.params.beta3);
    return f;
}

Configuration decode_config(const std::vector<double>& features,
                            const SearchSpaceDef& space) {
    if (int(features.size()) != SearchSpaceDef::n_features)
        throw std::invalid_argument("decode_config: expected 12 features");
    int rule = -1;
    for (int i = 0; i < SearchSpaceDef::n_rules; ++i) {
        if (features[i] == 1.0) {
            if (rule >= 0) throw std::invalid_argument("decode_config: multiple rule indicators set");
            rule = i;
        } else if (features[i] != 0.0) {
            throw std::invalid_argument("decode_config: rule indicators must be 0 or 1");
        }
    }
    if (rule < 0) throw std::invalid_argument("decode_config: no rule indicator set");
    Configuration config;
    config.rule = static_cast<RuleId>(rule);
    config.params.alpha = pow10_clamped(features[8], space.alpha_lo, space.alpha_hi);
    config.params.beta1 = pow10_clamped(features[9], space.beta_lo, space.beta_hi);
    config.params.beta2 = pow10_clamped(features[10], space.beta_lo, space.beta_hi);
    config.params.beta3 = pow10_clamped(features[11], space.beta_lo, space.beta_hi);
    validate_config(config, space);
    return config;
}

Configuration random_config(const SearchSpaceDef& space, Rng& rng) {
    Configuration config;
    config.rule = static_cast<RuleId>(uniform_below(rng, SearchSpaceDef::n_rules));
    auto draw = [&](double lo, double hi) {
        return std::clamp(log_uniform(rng, lo, hi), lo, hi);
    };
    config.params.alpha = draw(space.alpha_lo, space.alpha_hi);
    config.params.beta1 = draw(space.beta_lo, space.beta_hi);
    config.params.beta2 = draw(space.beta_lo, space.beta_hi);
    config.params.beta3 = draw(space.beta_lo, space.beta_hi);
    return config;
}

} // namespace mushroom
