#include "mushroom/search.hpp"

#include <condition_variable>
#include <deque>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mushroom {

namespace {

struct Job {
    int id = 0;
    Configuration config{};
    std::uint64_t train_seed = 0;
    std::uint64_t net_seed = 0;
    bool model_proposed = false;
    Acquisition acquisition = Acquisition::EI;
    double predicted_mean = 0.0;
    double liar_value = 1.0;
};

struct Completion {
    Job job;
    ObjectiveResult result;
};

// Single-producer multi-consumer job queue plus its completion channel.
class WorkQueues {
public:
    void push_job(Job job) {
        {
            std::lock_guard lock(mtx_);
            jobs_.push_back(std::move(job));
        }
        job_ready_.notify_one();
    }

    bool pop_job(Job& out) {
        std::unique_lock lock(mtx_);
        job_ready_.wait(lock, [&] { return stop_ || !jobs_.empty(); });
        if (jobs_.empty()) return false;
        out = std::move(jobs_.front());
        jobs_.pop_front();
        return true;
    }

    void push_completion(Completion c) {
        {
            std::lock_guard lock(mtx_);
            done_.push_back(std::move(c));
        }
        completion_ready_.notify_one();
    }

    Completion pop_completion() {
        std::unique_lock lock(mtx_);
        completion_ready_.wait(lock, [&] { return !done_.empty(); });
        Completion c = std::move(done_.front());
        done_.pop_front();
        return c;
    }

    void stop() {
        {
            std::lock_guard lock(mtx_);
            stop_ = true;
        }
        job_ready_.notify_all();
    }

private:
    std::mutex mtx_;
    std::condition_variable job_ready_;
    std::condition_variable completion_ready_;
    std::deque<Job> jobs_;
    std::deque<Completion> done_;
    bool stop_ = false;
};

void worker_loop(WorkQueues& queues, const Objective& objective) {
    Job job;
    while (queues.pop_job(job)) {
        Completion c;
        try {
            c.result = objective(job.config, job.train_seed, job.net_seed);
        } catch (...) {
            c.result = ObjectiveResult{0.0, 0.0, false};
        }
        c.job = std::move(job);
        queues.push_completion(std::move(c));
    }
}

} // namespace

EvaluationLog run_search(const SearchSpaceDef& space, const Objective& objective,
                         const SearchOptions& opts, const CompletionHook& on_complete) {
    if (opts.budget < 1) throw std::invalid_argument("run_search: budget must be >= 1");
    if (opts.n_workers < 1) throw std::invalid_argument("run_search: n_workers must be >= 1");
    if (opts.pool_size < 1) throw std::invalid_argument("run_search: pool_size must be >= 1");
    if (!(opts.eta > 0.0)) throw std::invalid_argument("run_search: eta must be > 0");

    int n_init = opts.n_init > 0 ? opts.n_init : std::max(10, opts.n_workers);
    n_init = std::min(n_init, opts.budget);

    // Independent deterministic streams: proposals/pool draws, hedge
    // selection, per-evaluation seeds, forest fits.
    Rng proposal_rng = make_rng(split_seed(opts.seed, 1));
    HedgeState hedge;
    hedge.eta = opts.eta;
    hedge.rng = make_rng(split_seed(opts.seed, 2));
    const std::uint64_t eval_seed_base = split_seed(opts.seed, 3);
    const std::uint64_t fit_seed_base = split_seed(opts.seed, 4);

    WorkQueues queues;
    std::vector<std::thread> workers;
    workers.reserve(opts.n_workers);
    for (int w = 0; w < opts.n_workers; ++w)
        workers.emplace_back(worker_loop, std::ref(queues), std::cref(objective));

    EvaluationLog completed;
    completed.reserve(opts.budget);
    std::vector<Job> in_flight;
    int dispatched = 0;

    auto dispatch = [&](Job job) {
        job.id = dispatched;
        std::uint64_t eval_seed = split_seed(eval_seed_base, std::uint64_t(dispatched));
        job.train_seed = split_seed(eval_seed, 1);
        job.net_seed = split_seed(eval_seed, 2);
        ++dispatched;
        in_flight.push_back(job);
        queues.push_job(std::move(job));
    };

    for (int i = 0; i < n_init; ++i) {
        Job job;
        job.config = random_config(space, proposal_rng);
        dispatch(std::move(job));
    }

    ForestModel forest;
    double f_best = 1.0;

    while (int(completed.size()) < opts.budget) {
        Completion c = queues.pop_completion();

        for (std::size_t i = 0; i < in_flight.size(); ++i) {
            if (in_flight[i].id == c.job.id) {
                in_flight.erase(in_flight.begin() + i);
                break;
            }
        }

        EvaluationRecord rec;
        rec.config = c.job.config;
        rec.train_seed = c.job.train_seed;
        rec.net_seed = c.job.net_seed;
        rec.test_accuracy = c.result.test_accuracy;
        rec.train_accuracy = c.result.train_accuracy;
        rec.ok = c.result.ok;
        rec.completion_index = std::int64_t(completed.size());
        rec.proposal_kind = c.job.model_proposed ? "model" : "random";
        rec.acquisition_used =
            c.job.model_proposed ? acquisition_name(c.job.acquisition) : "none";
        rec.liar_value = c.job.liar_value;
        f_best = std::min(f_best, rec.objective());
        completed.push_back(rec);
        if (on_complete) on_complete(completed.back());

        if (int(completed.size()) >= opts.budget) break;

        bool room = int(completed.size()) + int(in_flight.size()) < opts.budget;
        if (room) {
            // Refit on completed records plus constant-liar targets for
            // everything still in flight, then propose the replacement.
            std::vector<std::vector<double>> features;
            std::vector<double> targets;
            features.reserve(completed.size() + in_flight.size());
            targets.reserve(completed.size() + in_flight.size());
            for (const auto& r : completed) {
                features.push_back(encode_config(r.config, space));
                targets.push_back(r.objective());
            }
            for (const auto& j : in_flight) {
                features.push_back(encode_config(j.config, space));
                targets.push_back(f_best);
            }
            forest = fit_forest(features, targets, opts.forest,
                                split_seed(fit_seed_base, std::uint64_t(dispatched)));

            if (c.job.model_proposed)
                hedge_update(hedge, c.job.acquisition, -c.job.predicted_mean);

            Proposal prop = propose(forest, space, f_best, hedge, opts.pool_size,
                                    proposal_rng, opts.kappa);
            Job job;
            job.config = prop.config;
            job.model_proposed = true;
            job.acquisition = prop.acquisition;
            job.predicted_mean = prop.predicted_mean;
            job.liar_value = f_best;
            dispatch(std::move(job));
        } else if (c.job.model_proposed) {
            hedge_update(hedge, c.job.acquisition, -c.job.predicted_mean);
        }
    }

    queues.stop();
    for (auto& t : workers) t.join();
    return completed;
}

void persist_log(const EvaluationLog& log, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& rec : log) out << record_to_json(rec) << "\n";
}

EvaluationLog load_log(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    EvaluationLog log;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            log.push_back(record_from_json(line));
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << path.string() << ":" << line_no << ": bad log line: " << e.what();
            throw std::runtime_error(os.str());
        }
    }
    return log;
}

const EvaluationRecord* best_record(const EvaluationLog& log) {
    const EvaluationRecord* best = nullptr;
    for (const auto& rec : log) {
        if (!rec.ok) continue;
        if (!best || rec.test_accuracy > best->test_accuracy) best = &rec;
    }
    return best;
}

} // namespace mushroom
