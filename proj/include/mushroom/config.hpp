#ifndef MUSHROOM_CONFIG_HPP
#define MUSHROOM_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "mushroom/net.hpp"
#include "mushroom/search.hpp"
#include "mushroom/trainer.hpp"

// Experiment definition: a JSON file with optional sections "net",
// "protocol", "eval" and "search"; command-line flags override file values.

namespace mushroom {

struct RunConfig {
    std::string dataset = "mnist";
    std::string data_dir; // empty = $MUSHROOM_DATA_DIR
    NetConfig net{};
    TrainProtocol protocol{};
    std::optional<Configuration> eval; // required by the eval command
    SearchOptions search{};
    std::string out = "search_log.jsonl";

    // Bound checks for every populated section; throws with the offending
    // field's path.
    void validate() const;
};

RunConfig load_run_config(const std::filesystem::path& file);

} // namespace mushroom

#endif
