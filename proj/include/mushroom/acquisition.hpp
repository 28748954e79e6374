#ifndef MUSHROOM_ACQUISITION_HPP
#define MUSHROOM_ACQUISITION_HPP

#include <array>
#include <string>

#include "mushroom/forest.hpp"
#include "mushroom/search_space.hpp"

// Acquisition portfolio {EI, PI, LCB} over the surrogate's (mean, spread)
// predictions, selected per iteration by an online hedge bandit. The internal
// objective f = 1 - accuracy is minimized; f_best is the best completed value.

namespace mushroom {

enum class Acquisition { EI, PI, LCB };

inline constexpr std::array<Acquisition, 3> kAllAcquisitions = {
    Acquisition::EI, Acquisition::PI, Acquisition::LCB};

const std::string& acquisition_name(Acquisition a);

double normal_cdf(double z);
double normal_pdf(double z);

// Expected improvement below f_best; >= 0, exact max(0, f_best - mean) at
// spread 0.
double expected_improvement(double mean, double spread, double f_best);

// Probability the objective improves on f_best.
double probability_of_improvement(double mean, double spread, double f_best);

// Lower confidence bound; smaller is more promising.
double lower_confidence_bound(double mean, double spread, double kappa);

struct HedgeState {
    std::array<double, 3> gains{};
    double eta = 1.0;
    Rng rng{0};

    // softmax(eta * gains), max-shifted; strictly positive, sums to 1.
    std::array<double, 3> probabilities() const;
};

Acquisition hedge_select(HedgeState& state);
void hedge_update(HedgeState& state, Acquisition chosen, double reward);

struct Proposal {
    Configuration config{};
    Acquisition acquisition = Acquisition::EI;
    double predicted_mean = 0.0;
};

// Draws pool_size uniform candidates, scores them under the hedge-chosen
// acquisition, and returns the best scorer (first drawn on ties).
Proposal propose(const ForestModel& model, const SearchSpaceDef& space, double f_best,
                 HedgeState& hedge, int pool_size, Rng& rng, double kappa = 1.96);

} // namespace mushroom

#endif
