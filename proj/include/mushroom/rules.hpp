#ifndef MUSHROOM_RULES_HPP
#define MUSHROOM_RULES_HPP

#include <array>
#include <string>

#include "mushroom/matrix.hpp"

// The eight modulated local learning rules. Each operator maps the current
// weight matrix to the updated one given presynaptic (x_e), postsynaptic
// (x_o) and modulatory (x_m) activity. Row index i pairs with x_e[i], column
// index j with x_o[j] and x_m[j]. All rules are additive (W + dW) except SLR,
// which replaces W with its implicit-step solution.

namespace mushroom {

enum class RuleId { GMR, MCR, NSCR, LMSR, SLR, GUR, NSCoR, MOR };

inline constexpr std::array<RuleId, 8> kAllRules = {
    RuleId::GMR, RuleId::MCR,  RuleId::NSCR,  RuleId::LMSR,
    RuleId::SLR, RuleId::GUR,  RuleId::NSCoR, RuleId::MOR};

const std::string& rule_name(RuleId rule);
RuleId rule_from_name(const std::string& name); // throws listing valid names

struct RuleParams {
    double alpha = 0.1;
    double beta1 = 0.01;
    double beta2 = 0.01;
    double beta3 = 0.01;
    double w0 = 1.0; // SLR ceiling; fixed, not part of the search space
};

struct SynapticInputs {
    Vec x_e; // presynaptic, binary, length n_hidden
    Vec x_o; // postsynaptic, length n_out
    Vec x_m; // modulatory, in [0,1], length n_out
};

Matrix mcr(const SynapticInputs& s, const RuleParams& p, Matrix w);
Matrix nscr(const SynapticInputs& s, const RuleParams& p, Matrix w);
Matrix nscor(const SynapticInputs& s, const RuleParams& p, Matrix w);
Matrix mor(const SynapticInputs& s, const RuleParams& p, Matrix w);
Matrix lmsr(const SynapticInputs& s, const RuleParams& p, Matrix w);
Matrix slr(const SynapticInputs& s, const RuleParams& p, Matrix w);
Matrix gmr(const SynapticInputs& s, const RuleParams& p, Matrix w);
Matrix gur(const SynapticInputs& s, const RuleParams& p, Matrix w);

// Dispatch on rule id; parameters a rule does not use are ignored.
Matrix apply_rule(RuleId rule, const SynapticInputs& s, const RuleParams& p, Matrix w);

} // namespace mushroom

#endif
