#include "mushroom/config.hpp"

#include <fstream>

#include <json.hpp>

#include "mushroom/search_space.hpp"

namespace mushroom {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw std::invalid_argument(path + ": " + msg);
}

template <typename T>
void read_field(const json& j, const char* section, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        fail(std::string(section) + "." + key, "wrong type");
    }
}

void check_known_keys(const json& j, const char* section,
                      std::initializer_list<const char*> known) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) fail(std::string(section) + "." + it.key(), "unknown field");
    }
}

} // namespace

void RunConfig::validate() const {
    if (!known_dataset(dataset))
        fail("dataset", "'" + dataset + "' is not one of: mnist, fashion-mnist");
    try {
        net.validate();
    } catch (const std::exception& e) {
        fail("net", e.what());
    }
    if (protocol.passes < 0.0) fail("protocol.passes", "must be >= 0");
    if (eval) {
        try {
            validate_config(*eval, SearchSpaceDef{});
        } catch (const std::exception& e) {
            fail("eval", e.what());
        }
    }
    if (search.budget < 1) fail("search.budget", "must be >= 1");
    if (search.n_workers < 1) fail("search.workers", "must be >= 1");
    if (search.n_init < 0) fail("search.n_init", "must be >= 0 (0 = default)");
    if (search.pool_size < 1) fail("search.pool_size", "must be >= 1");
    if (!(search.eta > 0.0)) fail("search.eta", "must be > 0");
    if (!(search.kappa >= 0.0)) fail("search.kappa", "must be >= 0");
}

RunConfig load_run_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open config " + file.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("config " + file.string() + ": " + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("config root must be a JSON object");
    check_known_keys(j, "config",
                     {"dataset", "data_dir", "net", "protocol", "eval", "search", "out"});

    RunConfig cfg;
    read_field(j, "config", "dataset", cfg.dataset);
    read_field(j, "config", "data_dir", cfg.data_dir);
    read_field(j, "config", "out", cfg.out);

    if (j.contains("net")) {
        const auto& n = j.at("net");
        check_known_keys(n, "net", {"n_hidden", "fan_in", "k_active", "gamma"});
        read_field(n, "net", "n_hidden", cfg.net.n_hidden);
        read_field(n, "net", "fan_in", cfg.net.fan_in);
        read_field(n, "net", "k_active", cfg.net.k_active);
        read_field(n, "net", "gamma", cfg.net.gamma);
    }
    if (j.contains("protocol")) {
        const auto& p = j.at("protocol");
        check_known_keys(p, "protocol", {"n_train", "passes", "train_seed", "net_seed"});
        read_field(p, "protocol", "n_train", cfg.protocol.n_train);
        read_field(p, "protocol", "passes", cfg.protocol.passes);
        read_field(p, "protocol", "train_seed", cfg.protocol.train_seed);
        read_field(p, "protocol", "net_seed", cfg.protocol.net_seed);
    }
    if (j.contains("eval")) {
        const auto& e = j.at("eval");
        check_known_keys(e, "eval", {"rule", "alpha", "beta1", "beta2", "beta3"});
        Configuration c;
        std::string rule = rule_name(c.rule);
        read_field(e, "eval", "rule", rule);
        try {
            c.rule = rule_from_name(rule);
        } catch (const std::exception& ex) {
            fail("eval.rule", ex.what());
        }
        read_field(e, "eval", "alpha", c.params.alpha);
        read_field(e, "eval", "beta1", c.params.beta1);
        read_field(e, "eval", "beta2", c.params.beta2);
        read_field(e, "eval", "beta3", c.params.beta3);
        cfg.eval = c;
    }
    if (j.contains("search")) {
        const auto& s = j.at("search");
        check_known_keys(s, "search",
                         {"budget", "workers", "n_init", "pool_size", "eta", "kappa", "seed"});
        read_field(s, "search", "budget", cfg.search.budget);
        read_field(s, "search", "workers", cfg.search.n_workers);
        read_field(s, "search", "n_init", cfg.search.n_init);
        read_field(s, "search", "pool_size", cfg.search.pool_size);
        read_field(s, "search", "eta", cfg.search.eta);
        read_field(s, "search", "kappa", cfg.search.kappa);
        read_field(s, "search", "seed", cfg.search.seed);
    }
    cfg.validate();
    return cfg;
}

} // namespace mushroom
