#ifndef MUSHROOM_TRAINER_HPP
#define MUSHROOM_TRAINER_HPP

#include <cstdint>

#include "mushroom/dataset.hpp"
#include "mushroom/net.hpp"
#include "mushroom/record.hpp"

// Online single-pass training of the plastic readout, and the test-set
// evaluation that serves as the search objective.

namespace mushroom {

struct TrainProtocol {
    std::uint32_t n_train = 20000;
    double passes = 1.0; // fraction of the subsample presented; 1.0 = one full pass
    std::uint64_t train_seed = 0;
    std::uint64_t net_seed = 0;
};

// One-hot supervision signal for the modulatory layer.
Vec make_modulatory(int label, int n_out);

struct TrainResult {
    Matrix weights;
    Projection projection;
    double train_accuracy = 0.0; // online accuracy over the training stream
    bool finite = true;
};

// Weights start at zero; each presented sample runs encode -> forward ->
// make_modulatory -> apply_rule. Presentation order is the seeded subsample
// draw order; round(n_train * passes) updates total.
TrainResult train_online(const ImageSet& images, const LabelSet& labels, RuleId rule,
                         const RuleParams& params, const NetConfig& net,
                         const TrainProtocol& proto);

double evaluate(const Matrix& weights, const ImageSet& test_images,
                const LabelSet& test_labels, const Projection& proj,
                const NetConfig& net);

// Total objective wrapper: trains and evaluates one configuration, measuring
// wall time. Never throws; any failure (including non-finite weights) yields
// a record with status failed and zero accuracy.
EvaluationRecord evaluate_config(const Configuration& config, const Dataset& data,
                                 const NetConfig& net, const TrainProtocol& proto);

} // namespace mushroom

#endif
