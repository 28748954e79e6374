#ifndef MUSHROOM_SEARCH_HPP
#define MUSHROOM_SEARCH_HPP

#include <filesystem>
#include <functional>

#include "mushroom/acquisition.hpp"
#include "mushroom/record.hpp"
#include "mushroom/search_space.hpp"

// Asynchronous model-based search. A coordinator owns all search state and
// processes one completion event at a time: append the record, refit the
// forest on completed evaluations plus constant-liar values for in-flight
// ones, update the hedge with the completed proposal's stored reward, then
// propose and dispatch a replacement. Workers only run the objective.

namespace mushroom {

struct SearchOptions {
    int budget = 200;
    int n_workers = 1;
    int n_init = 0; // 0 = max(10, n_workers), clamped to budget
    int pool_size = 10000;
    double eta = 1.0;
    double kappa = 1.96;
    std::uint64_t seed = 0;
    ForestHyper forest{};
};

struct ObjectiveResult {
    double test_accuracy = 0.0;
    double train_accuracy = 0.0;
    bool ok = true;
};

// Objectives receive the per-evaluation seeds derived by the coordinator;
// they must be safe to call from several worker threads at once.
using Objective = std::function<ObjectiveResult(
    const Configuration&, std::uint64_t train_seed, std::uint64_t net_seed)>;

using EvaluationLog = std::vector<EvaluationRecord>;
using CompletionHook = std::function<void(const EvaluationRecord&)>;

// Runs until exactly `budget` evaluations complete and returns them in
// completion order. Single-worker runs are a pure function of the seed; the
// logged wall_time field is therefore left at zero (per-evaluation timing is
// available through `eval`).
EvaluationLog run_search(const SearchSpaceDef& space, const Objective& objective,
                         const SearchOptions& opts,
                         const CompletionHook& on_complete = {});

// JSONL persistence, one record per line in completion order; lossless.
void persist_log(const EvaluationLog& log, const std::filesystem::path& path);
EvaluationLog load_log(const std::filesystem::path& path); // names bad lines

const EvaluationRecord* best_record(const EvaluationLog& log);

} // namespace mushroom

#endif
