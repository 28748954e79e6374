#ifndef MUSHROOM_RECORD_HPP
#define MUSHROOM_RECORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mushroom/rules.hpp"

namespace mushroom {

// A point in the joint (rule, hyperparameter) search space.
struct Configuration {
    RuleId rule = RuleId::LMSR;
    RuleParams params{};

    bool operator==(const Configuration& o) const {
        return rule == o.rule && params.alpha == o.params.alpha &&
               params.beta1 == o.params.beta1 && params.beta2 == o.params.beta2 &&
               params.beta3 == o.params.beta3;
    }
};

// One completed objective evaluation; the unit of the search log.
// proposal_kind is "random" for initial-design points and "model" for
// surrogate-guided proposals; acquisition_used is "none" for random points.
struct EvaluationRecord {
    Configuration config{};
    std::uint64_t train_seed = 0;
    std::uint64_t net_seed = 0;
    double test_accuracy = 0.0;
    double train_accuracy = 0.0;
    double wall_time = 0.0;
    bool ok = true;

    std::int64_t completion_index = -1;
    std::string proposal_kind = "random";
    std::string acquisition_used = "none";
    double liar_value = 1.0;

    // Internal objective: minimized, failed evaluations score worst.
    double objective() const { return ok ? 1.0 - test_accuracy : 1.0; }
};

std::string record_to_json(const EvaluationRecord& rec);
EvaluationRecord record_from_json(const std::string& line);

} // namespace mushroom

#endif
