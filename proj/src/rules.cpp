#include "mushroom/rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mushroom {

namespace {

const std::array<std::string, 8> kRuleNames = {"GMR", "MCR",  "NSCR",  "LMSR",
                                               "SLR", "GUR",  "NSCoR", "MOR"};

void check_shapes(const SynapticInputs& s, const Matrix& w) {
    if (int(s.x_e.size()) != w.rows || int(s.x_o.size()) != w.cols ||
        int(s.x_m.size()) != w.cols) {
        std::ostringstream os;
        os << "rule input shapes (x_e=" << s.x_e.size() << ", x_o=" << s.x_o.size()
           << ", x_m=" << s.x_m.size() << ") do not match weights " << w.rows << "x"
           << w.cols;
        throw std::invalid_argument(os.str());
    }
}

inline double relu(double v) { return v > 0.0 ? v : 0.0; }

// Scalar modulation g = sum_j ReLU(x_m_j - x_o_j), shared by NSCR and NSCoR.
double summed_gate(const SynapticInputs& s) {
    double g = 0.0;
    for (std::size_t j = 0; j < s.x_m.size(); ++j) g += relu(s.x_m[j] - s.x_o[j]);
    return g;
}

} // namespace

const std::string& rule_name(RuleId rule) {
    return kRuleNames[static_cast<std::size_t>(rule)];
}

RuleId rule_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kRuleNames.size(); ++i)
        if (kRuleNames[i] == name) return static_cast<RuleId>(i);
    std::ostringstream os;
    os << "unknown rule '" << name << "', valid names:";
    for (const auto& n : kRuleNames) os << " " << n;
    throw std::invalid_argument(os.str());
}

Matrix mcr(const SynapticInputs& s, const RuleParams& p, Matrix w) {
    check_shapes(s, w);
    for (int j = 0; j < w.cols; ++j) {
        double gate = relu(s.x_m[j] - s.x_o[j]);
        if (gate == 0.0) continue;
        double dj = p.alpha * gate * (s.x_m[j] - p.beta1);
        for (int i = 0; i < w.rows; ++i) {
            if (s.x_e[i] == 0.0) continue;
            w.at(i, j) += dj * s.x_e[i];
        }
    }
    return w;
}

Matrix nscr(const SynapticInputs& s, const RuleParams& p, Matrix w) {
    check_shapes(s, w);
    double g = summed_gate(s);
    if (g == 0.0) return w;
    double ag = p.alpha * g;
    for (int i = 0; i < w.rows; ++i) {
        if (s.x_e[i] == 0.0) continue;
        double* row = w.row(i);
        for (int j = 0; j < w.cols; ++j)
            row[j] += ag * s.x_e[i] * (s.x_m[j] - p.beta1 * row[j]);
    }
    return w;
}

Matrix nscor(const SynapticInputs& s, const RuleParams& p, Matrix w) {
    check_shapes(s, w);
    double g = summed_gate(s);
    if (g == 0.0) return w;
    double ag = p.alpha * g;
    for (int i = 0; i < w.rows; ++i) {
        double* row = w.row(i);
        for (int j = 0; j < w.cols; ++j)
            row[j] += ag * (s.x_e[i] * s.x_m[j] - p.beta1 * row[j]);
    }
    return w;
}

Matrix mor(const SynapticInputs& s, const RuleParams& p, Matrix w) {
    check_shapes(s, w);
    for (int j = 0; j < w.cols; ++j) {
        double gate = relu(s.x_m[j] - s.x_o[j]);
        if (gate == 0.0) continue;
        double ag = p.alpha * gate;
        double decay = p.beta1 * s.x_o[j] * s.x_o[j];
        for (int i = 0; i < w.rows; ++i)
            w.at(i, j) += ag * (s.x_e[i] * s.x_m[j] - decay * w.at(i, j));
    }
    return w;
}

Matrix lmsr(const SynapticInputs& s, const RuleParams& p, Matrix w) {
    check_shapes(s, w);
    for (int i = 0; i < w.rows; ++i) {
        if (s.x_e[i] == 0.0) continue;
        double* row = w.row(i);
        for (int j = 0; j < w.cols; ++j)
            row[j] += p.alpha * s.x_e[i] * (s.x_m[j] - s.x_o[j]);
    }
    return w;
}

Matrix slr(const SynapticInputs& s, const RuleParams& p, Matrix w) {
    check_shapes(s, w);
    for (int j = 0; j < w.cols; ++j) {
        double gate = relu(s.x_m[j] - s.x_o[j]);
        if (gate == 0.0) continue;
        double ag = p.alpha * gate;
        for (int i = 0; i < w.rows; ++i) {
            double& wij = w.at(i, j);
            wij = (wij + p.w0 * ag * s.x_e[i]) / (1.0 + ag * (p.beta1 + s.x_e[i]));
        }
    }
    return w;
}

Matrix gmr(const SynapticInputs& s, const RuleParams& p, Matrix w) {
    check_shapes(s, w);
    for (int j = 0; j < w.cols; ++j) {
        if (s.x_m[j] == 0.0) continue;
        double am = p.alpha * s.x_m[j];
        double base = p.beta1 * s.x_o[j] + p.beta3;
        for (int i = 0; i < w.rows; ++i)
            w.at(i, j) += am * (base + p.beta2 * (s.x_o[j] - s.x_e[i]));
    }
    return w;
}

Matrix gur(const SynapticInputs& s, const RuleParams& p, Matrix w) {
    check_shapes(s, w);
    for (int j = 0; j < w.cols; ++j) {
        double base = p.beta1 * s.x_o[j] + p.beta3;
        for (int i = 0; i < w.rows; ++i)
            w.at(i, j) += p.alpha * (base + p.beta2 * (s.x_o[j] - s.x_e[i]));
    }
    return w;
}

Matrix apply_rule(RuleId rule, const SynapticInputs& s, const RuleParams& p, Matrix w) {
    switch (rule) {
        case RuleId::GMR: return gmr(s, p, std::move(w));
        case RuleId::MCR: return mcr(s, p, std::move(w));
        case RuleId::NSCR: return nscr(s, p, std::move(w));
        case RuleId::LMSR: return lmsr(s, p, std::move(w));
        case RuleId::SLR: return slr(s, p, std::move(w));
        case RuleId::GUR: return gur(s, p, std::move(w));
        case RuleId::NSCoR: return nscor(s, p, std::move(w));
        case RuleId::MOR: return mor(s, p, std::move(w));
    }
    throw std::invalid_argument("apply_rule: invalid rule id");
}

} // namespace mushroom
