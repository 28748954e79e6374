#include "mushroom/forest.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "mushroom/rng.hpp"

namespace mushroom {

namespace {

struct Builder {
    const std::vector<std::vector<double>>& x;
    const std::vector<double>& y;
    const ForestHyper& hyper;
    int n_features;
    Rng rng;
    std::vector<TreeNode> nodes;

    // Mean accumulated over targets sorted ascending, so that fitting is
    // invariant to the order training records were supplied in.
    double canonical_mean(std::vector<std::uint32_t> idx) const {
        std::sort(idx.begin(), idx.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return y[a] < y[b]; });
        double sum = 0.0;
        for (auto i : idx) sum += y[i];
        return sum / double(idx.size());
    }

    int make_leaf(const std::vector<std::uint32_t>& idx) {
        TreeNode leaf;
        leaf.value = canonical_mean(idx);
        nodes.push_back(leaf);
        return int(nodes.size()) - 1;
    }

    struct Split {
        bool found = false;
        int feature = -1;
        double threshold = 0.0;
        double sse = 0.0;
    };

    Split best_split(const std::vector<std::uint32_t>& idx,
                     const std::vector<int>& feature_order) {
        Split best;
        std::size_t n = idx.size();
        std::vector<std::pair<double, double>> vt(n); // (feature value, target)
        for (int f : feature_order) {
            for (std::size_t i = 0; i < n; ++i) vt[i] = {x[idx[i]][f], y[idx[i]]};
            std::sort(vt.begin(), vt.end());
            if (vt.front().first == vt.back().first) continue; // constant feature

            double total_sum = 0.0, total_sq = 0.0;
            for (const auto& [v, t] : vt) {
                total_sum += t;
                total_sq += t * t;
            }
            double left_sum = 0.0, left_sq = 0.0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                left_sum += vt[i].second;
                left_sq += vt[i].second * vt[i].second;
                if (vt[i].first == vt[i + 1].first) continue;
                double nl = double(i + 1), nr = double(n - i - 1);
                double sse = (left_sq - left_sum * left_sum / nl) +
                             ((total_sq - left_sq) -
                              (total_sum - left_sum) * (total_sum - left_sum) / nr);
                if (!best.found || sse < best.sse) {
                    double lo = vt[i].first, hi = vt[i + 1].first;
                    double mid = lo + (hi - lo) / 2.0;
                    if (!(mid >= lo && mid < hi)) mid = lo; // adjacent doubles
                    best = {true, f, mid, sse};
                }
            }
        }
        return best;
    }

    int build(const std::vector<std::uint32_t>& idx, int depth) {
        auto [lo, hi] = std::minmax_element(idx.begin(), idx.end(),
                                            [&](std::uint32_t a, std::uint32_t b) {
                                                return y[a] < y[b];
                                            });
        bool zero_variance = y[*lo] == y[*hi];
        if (int(idx.size()) <= hyper.min_leaf || zero_variance ||
            (hyper.max_depth > 0 && depth >= hyper.max_depth))
            return make_leaf(idx);

        int want = hyper.max_features > 0 ? hyper.max_features : (n_features + 2) / 3;
        want = std::min(want, n_features);
        std::vector<int> feature_order;
        {
            auto picks = sample_without_replacement(rng, std::uint32_t(n_features),
                                                    std::uint32_t(want));
            feature_order.assign(picks.begin(), picks.end());
        }

        Split split = best_split(idx, feature_order);
        if (!split.found) return make_leaf(idx); // sampled features all constant

        std::vector<std::uint32_t> left_idx, right_idx;
        for (auto i : idx)
            (x[i][split.feature] <= split.threshold ? left_idx : right_idx).push_back(i);

        int node = int(nodes.size());
        nodes.emplace_back();
        nodes[node].feature = split.feature;
        nodes[node].threshold = split.threshold;
        int left = build(left_idx, depth + 1);
        int right = build(right_idx, depth + 1);
        nodes[node].left = left;
        nodes[node].right = right;
        return node;
    }
};

} // namespace

double RegressionTree::predict(std::span<const double> x) const {
    int node = 0;
    while (nodes[node].feature >= 0)
        node = x[nodes[node].feature] <= nodes[node].threshold ? nodes[node].left
                                                               : nodes[node].right;
    return nodes[node].value;
}

std::pair<double, double> ForestModel::predict(std::span<const double> x) const {
    if (!fitted || trees.empty())
        throw std::logic_error("forest predict called before fit");
    double mean = 0.0;
    for (const auto& tree : trees) mean += tree.predict(x);
    mean /= double(trees.size());
    double var = 0.0;
    for (const auto& tree : trees) {
        double d = tree.predict(x) - mean;
        var += d * d;
    }
    var /= double(trees.size());
    return {mean, std::sqrt(var)};
}

void ForestModel::dump(std::ostream& os) const {
    for (std::size_t t = 0; t < trees.size(); ++t) {
        const auto& nodes = trees[t].nodes;
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            if (nodes[n].feature < 0)
                os << "tree " << t << " node " << n << " leaf " << nodes[n].value << "\n";
            else
                os << "tree " << t << " node " << n << " split " << nodes[n].feature
                   << " " << nodes[n].threshold << " " << nodes[n].left << " "
                   << nodes[n].right << "\n";
        }
    }
}

ForestModel fit_forest(const std::vector<std::vector<double>>& features,
                       const std::vector<double>& targets, const ForestHyper& hyper,
                       std::uint64_t seed) {
    if (features.empty() || features.size() != targets.size())
        throw std::invalid_argument("fit_forest: need at least one (features, target) record");
    int d = int(features.front().size());
    for (const auto& row : features)
        if (int(row.size()) != d)
            throw std::invalid_argument("fit_forest: inconsistent feature dimensions");
    if (hyper.n_trees < 1) throw std::invalid_argument("fit_forest: n_trees must be >= 1");

    ForestModel model;
    model.seed = seed;
    model.target_min = *std::min_element(targets.begin(), targets.end());
    model.target_max = *std::max_element(targets.begin(), targets.end());
    model.trees.reserve(hyper.n_trees);

    std::uint32_t n = std::uint32_t(features.size());
    for (int t = 0; t < hyper.n_trees; ++t) {
        Builder builder{features, targets, hyper, d, make_rng(split_seed(seed, t)), {}};
        std::vector<std::uint32_t> idx(n);
        if (hyper.bootstrap) {
            for (auto& i : idx) i = std::uint32_t(uniform_below(builder.rng, n));
        } else {
            for (std::uint32_t i = 0; i < n; ++i) idx[i] = i;
        }
        builder.build(idx, 0);
        model.trees.push_back(RegressionTree{std::move(builder.nodes)});
    }
    model.fitted = true;
    return model;
}

} // namespace mushroom
