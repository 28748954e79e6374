#include "mushroom/record.hpp"

#include <json.hpp>

namespace mushroom {

std::string record_to_json(const EvaluationRecord& rec) {
    nlohmann::ordered_json j;
    j["rule"] = rule_name(rec.config.rule);
    j["alpha"] = rec.config.params.alpha;
    j["beta1"] = rec.config.params.beta1;
    j["beta2"] = rec.config.params.beta2;
    j["beta3"] = rec.config.params.beta3;
    j["train_seed"] = rec.train_seed;
    j["net_seed"] = rec.net_seed;
    j["test_accuracy"] = rec.test_accuracy;
    j["train_accuracy"] = rec.train_accuracy;
    j["wall_time"] = rec.wall_time;
    j["status"] = rec.ok ? "ok" : "failed";
    j["completion_index"] = rec.completion_index;
    j["proposal_kind"] = rec.proposal_kind;
    j["acquisition_used"] = rec.acquisition_used;
    j["liar_value"] = rec.liar_value;
    return j.dump();
}

EvaluationRecord record_from_json(const std::string& line) {
    auto j = nlohmann::json::parse(line);
    EvaluationRecord rec;
    rec.config.rule = rule_from_name(j.at("rule").get<std::string>());
    rec.config.params.alpha = j.at("alpha").get<double>();
    rec.config.params.beta1 = j.at("beta1").get<double>();
    rec.config.params.beta2 = j.at("beta2").get<double>();
    rec.config.params.beta3 = j.at("beta3").get<double>();
    rec.train_seed = j.at("train_seed").get<std::uint64_t>();
    rec.net_seed = j.at("net_seed").get<std::uint64_t>();
    rec.test_accuracy = j.at("test_accuracy").get<double>();
    rec.train_accuracy = j.at("train_accuracy").get<double>();
    rec.wall_time = j.at("wall_time").get<double>();
    rec.ok = j.at("status").get<std::string>() == "ok";
    rec.completion_index = j.at("completion_index").get<std::int64_t>();
    rec.proposal_kind = j.at("proposal_kind").get<std::string>();
    rec.acquisition_used = j.at("acquisition_used").get<std::string>();
    rec.liar_value = j.at("liar_value").get<double>();
    return rec;
}

} // namespace mushroom
