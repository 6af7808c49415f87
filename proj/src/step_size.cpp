#include "simplexmatch/step_size.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace simplexmatch {

StepSizeRule StepSizeRule::fixed_md(int horizon, bool invert) {
  StepSizeRule r;
  r.kind = StepKind::FIXED_MD;
  r.horizon = horizon;
  r.invert_lipschitz = invert;
  return r;
}

StepSizeRule StepSizeRule::fixed_pgd(int horizon, bool invert) {
  StepSizeRule r = fixed_md(horizon, invert);
  r.kind = StepKind::FIXED_PGD;
  return r;
}

StepSizeRule StepSizeRule::dynamic_md() { return StepSizeRule{}; }

StepSizeRule StepSizeRule::dynamic_pgd() {
  StepSizeRule r;
  r.kind = StepKind::DYNAMIC_PGD;
  return r;
}

StepSizeRule StepSizeRule::heuristic_pgd(double theta) {
  if (!(theta >= 0.0) || !std::isfinite(theta)) throw InvalidArgument("heuristic step: theta must be finite and >= 0");
  StepSizeRule r;
  r.kind = StepKind::HEURISTIC_PGD;
  r.theta = theta;
  return r;
}

StepSizeRule StepSizeRule::constant_step(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("constant step: gamma must be finite and >= 0");
  StepSizeRule r;
  r.kind = StepKind::CONSTANT;
  r.constant = gamma;
  return r;
}

namespace {

double fixed_gamma(StepSizeRule& rule, double norm, double scale) {
  if (rule.horizon < 1) throw InvalidArgument("fixed step: horizon N must be >= 1");
  rule.running_l = std::max(rule.running_l, norm);
  const double root = std::sqrt(static_cast<double>(rule.horizon) + 1.0);
  if (!rule.invert_lipschitz) return scale * rule.running_l / root;
  if (rule.running_l == 0.0) return 0.0;
  return scale / (rule.running_l * root);
}

}  // namespace

double next_gamma(StepSizeRule& rule, int k, const Matrix& g, double energy) {
  if (k < 0) throw InvalidArgument("next_gamma: k must be >= 0");
  switch (rule.kind) {
    case StepKind::FIXED_MD: {
      const double n = static_cast<double>(g.rows());
      return fixed_gamma(rule, g.cwiseAbs().maxCoeff(), std::sqrt(2.0 * std::log(n)));
    }
    case StepKind::FIXED_PGD:
      return fixed_gamma(rule, g.norm(), std::numbers::sqrt2);
    case StepKind::DYNAMIC_MD: {
      const double norm = g.cwiseAbs().maxCoeff();
      if (norm == 0.0) return 0.0;
      return std::numbers::sqrt2 / (norm * std::sqrt(k + 1.0));
    }
    case StepKind::DYNAMIC_PGD: {
      const double norm = g.norm();
      if (norm == 0.0) return 0.0;
      return std::numbers::sqrt2 / (norm * std::sqrt(k + 1.0));
    }
    case StepKind::HEURISTIC_PGD: {
      if (energy == 0.0) return 0.0;
      return rule.theta * g.squaredNorm() / (energy * energy);
    }
    case StepKind::CONSTANT:
      return rule.constant;
  }
  throw InvalidArgument("next_gamma: unknown rule");
}

StepSizeRule parse_step_rule(const std::string& text, bool md, int horizon, bool invert) {
  auto value_after = [&](std::size_t prefix) {
    const std::string v = text.substr(prefix);
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v.size()) throw InvalidArgument("step rule '" + text + "': bad numeric parameter");
    return d;
  };
  if (text == "fixed") return md ? StepSizeRule::fixed_md(horizon, invert) : StepSizeRule::fixed_pgd(horizon, invert);
  if (text == "dynamic") return md ? StepSizeRule::dynamic_md() : StepSizeRule::dynamic_pgd();
  if (text.rfind("heuristic:", 0) == 0) return StepSizeRule::heuristic_pgd(value_after(10));
  if (text == "heuristic") return StepSizeRule::heuristic_pgd(1.0);
  if (text.rfind("const:", 0) == 0) return StepSizeRule::constant_step(value_after(6));
  throw InvalidArgument("unknown step rule '" + text + "' (expected fixed, dynamic, heuristic:θ or const:γ)");
}

std::string describe(const StepSizeRule& rule) {
  switch (rule.kind) {
    case StepKind::FIXED_MD: return "FIXED_MD";
    case StepKind::FIXED_PGD: return "FIXED_PGD";
    case StepKind::DYNAMIC_MD: return "DYNAMIC_MD";
    case StepKind::DYNAMIC_PGD: return "DYNAMIC_PGD";
    case StepKind::HEURISTIC_PGD: return "HEURISTIC_PGD";
    case StepKind::CONSTANT: return "CONSTANT";
  }
  return "?";
}

}  // namespace simplexmatch
