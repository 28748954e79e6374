#ifndef MUSHROOM_SEARCH_SPACE_HPP
#define MUSHROOM_SEARCH_SPACE_HPP

#include <vector>

#include "mushroom/record.hpp"
#include "mushroom/rng.hpp"

// Joint categorical/continuous search space: one of eight rules plus four
// continuous parameters sampled on a logarithmic scale.

namespace mushroom {

struct SearchSpaceDef {
    double alpha_lo = 1e-3;
    double alpha_hi = 1.0;
    double beta_lo = 1e-5;
    double beta_hi = 1.0;

    static constexpr int n_rules = 8;
    // 8 one-hot rule indicators + 4 log10-scaled continuous values.
    static constexpr int n_features = 12;
};

// Throws with a field-level message when the configuration leaves the box.
void validate_config(const Configuration& config, const SearchSpaceDef& space);

// One-hot rule block followed by log10(alpha), log10(beta1..3).
std::vector<double> encode_config(const Configuration& config,
                                  const SearchSpaceDef& space);

// Inverse of encode_config (exact on the continuous block up to pow/log
// round-trip; rule recovered from the active indicator).
Configuration decode_config(const std::vector<double>& features,
                            const SearchSpaceDef& space);

// Rule uniform over the eight ids; alpha and betas log-uniform in bounds.
Configuration random_config(const SearchSpaceDef& space, Rng& rng);

} // namespace mushroom

#endif
