#include "mushroom/trainer.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mushroom {

Vec make_modulatory(int label, int n_out) {
    if (label < 0 || label >= n_out) {
        std::ostringstream os;
        os << "label " << label << " outside [0, " << n_out << ")";
        throw std::invalid_argument(os.str());
    }
    Vec x_m(n_out, 0.0);
    x_m[label] = 1.0;
    return x_m;
}

TrainResult train_online(const ImageSet& images, const LabelSet& labels, RuleId rule,
                         const RuleParams& params, const NetConfig& net,
                         const TrainProtocol& proto) {
    net.validate();
    if (images.count == 0) throw std::invalid_argument("train_online: empty dataset");
    if (images.count != labels.count)
        throw std::invalid_argument("train_online: image/label counts differ");
    if (int(images.image_size()) != net.n_in)
        throw std::invalid_argument("train_online: image size does not match n_in");
    if (proto.passes < 0.0)
        throw std::invalid_argument("train_online: negative pass fraction");

    TrainResult result;
    result.projection = build_projection(net, proto.net_seed);
    result.weights = Matrix(net.n_hidden, net.n_out, 0.0);

    auto order = subsample_indices(images.count, proto.n_train, proto.train_seed);
    auto n_updates =
        std::uint64_t(std::llround(double(proto.n_train) * proto.passes));

    std::uint64_t correct = 0;
    for (std::uint64_t t = 0; t < n_updates; ++t) {
        std::uint32_t sample = order[t % order.size()];
        Vec x_e = encode(images.image(sample), result.projection, net.k_active);
        Vec x_o = forward(x_e, result.weights, net);
        int label = labels.labels[sample];
        if (predict(x_o) == label) ++correct;
        Vec x_m = make_modulatory(label, net.n_out);
        result.weights = apply_rule(rule, SynapticInputs{std::move(x_e), std::move(x_o),
                                                         std::move(x_m)},
                                    params, std::move(result.weights));
    }
    result.train_accuracy = n_updates ? double(correct) / double(n_updates) : 0.0;

    for (double w : result.weights.data) {
        if (!std::isfinite(w)) {
            result.finite = false;
            break;
        }
    }
    return result;
}

double evaluate(const Matrix& weights, const ImageSet& test_images,
                const LabelSet& test_labels, const Projection& proj,
                const NetConfig& net) {
    if (test_images.count == 0) throw std::invalid_argument("evaluate: empty test set");
    if (test_images.count != test_labels.count)
        throw std::invalid_argument("evaluate: image/label counts differ");

    std::uint64_t correct = 0;
    for (std::uint32_t i = 0; i < test_images.count; ++i) {
        Vec x_e = encode(test_images.image(i), proj, net.k_active);
        Vec x_o = forward(x_e, weights, net);
        if (predict(x_o) == test_labels.labels[i]) ++correct;
    }
    return double(correct) / double(test_images.count);
}

EvaluationRecord evaluate_config(const Configuration& config, const Dataset& data,
                                 const NetConfig& net, const TrainProtocol& proto) {
    EvaluationRecord rec;
    rec.config = config;
    rec.train_seed = proto.train_seed;
    rec.net_seed = proto.net_seed;
    auto t0 = std::chrono::steady_clock::now();
    try {
        TrainResult trained = train_online(data.train_images, data.train_labels,
                                           config.rule, config.params, net, proto);
        if (!trained.finite) throw NumericError("weights diverged during training");
        rec.train_accuracy = trained.train_accuracy;
        rec.test_accuracy = evaluate(trained.weights, data.test_images,
                                     data.test_labels, trained.projection, net);
        rec.ok = true;
    } catch (const std::exception&) {
        rec.ok = false;
        rec.test_accuracy = 0.0;
        rec.train_accuracy = 0.0;
    }
    rec.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

} // namespace mushroom
