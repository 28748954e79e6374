#ifndef MUSHROOM_FOREST_HPP
#define MUSHROOM_FOREST_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

// Bagged regression trees over encoded configurations. Prediction spread is
// the population standard deviation of the per-tree estimates.

namespace mushroom {

struct ForestHyper {
    int n_trees = 100;
    int min_leaf = 3;      // nodes at or below this size become leaves
    int max_features = 0;  // features tried per node; 0 means ceil(d/3)
    bool bootstrap = true;
    int max_depth = 0;     // 0 = unlimited
};

struct TreeNode {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    double value = 0.0;
    int left = -1;
    int right = -1;
};

struct RegressionTree {
    std::vector<TreeNode> nodes;
    double predict(std::span<const double> x) const;
};

struct ForestModel {
    std::vector<RegressionTree> trees;
    double target_min = 0.0;
    double target_max = 0.0;
    std::uint64_t seed = 0;
    bool fitted = false;

    // (mean, spread) over the per-tree predictions.
    std::pair<double, double> predict(std::span<const double> x) const;

    // Debug dump, one node per line:
    //   tree <t> node <n> leaf <value> | tree <t> node <n> split <feature> <threshold> <left> <right>
    void dump(std::ostream& os) const;
};

// Greedy variance-reduction trees on bootstrap resamples. Split thresholds
// are midpoints between distinct sorted feature values; the split minimizing
// summed child squared error wins, first candidate on ties.
ForestModel fit_forest(const std::vector<std::vector<double>>& features,
                       const std::vector<double>& targets, const ForestHyper& hyper,
                       std::uint64_t seed);

} // namespace mushroom

#endif
