#include "tb/trajectory.hpp"

#include <cmath>
#include <cstdio>

#include "tb/error.hpp"

namespace tb {
namespace {

bool nearly_equal(double a, double b) {
  const double tol = 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol;
}

std::string step_msg(int index, const std::string& what) {
  return "step " + std::to_string(index) + ": " + what;
}

}  // namespace

double Trajectory::total_return() const {
  return steps.empty() ? 0.0 : steps.front().return_to_go;
}

std::vector<double> compute_return_to_go(const std::vector<double>& rewards) {
  for (double r : rewards) {
    if (!std::isfinite(r)) throw ValidationError("non-finite reward");
  }
  std::vector<double> out(rewards.size());
  double acc = 0.0;
  for (size_t i = rewards.size(); i-- > 0;) {
    acc += rewards[i];
    out[i] = acc;
  }
  return out;
}

std::vector<std::string> validate_trajectory(const Trajectory& t) {
  std::vector<std::string> violations;
  if (t.steps.empty()) {
    violations.push_back("trajectory is empty");
    return violations;
  }

  for (size_t i = 0; i < t.steps.size(); ++i) {
    const TransitionStep& s = t.steps[i];
    if (s.index != static_cast<int>(i)) {
      violations.push_back(step_msg(s.index, "non-contiguous step index (expected " +
                                                 std::to_string(i) + ")"));
    }
    if (s.state.tag != t.tag) violations.push_back(step_msg(s.index, "state tag mismatch"));
    if (s.action.tag() != t.tag) violations.push_back(step_msg(s.index, "action tag mismatch"));
    if (!std::isfinite(s.reward)) violations.push_back(step_msg(s.index, "non-finite reward"));
    if (!std::isfinite(s.return_to_go)) {
      violations.push_back(step_msg(s.index, "non-finite return_to_go"));
    }
    try {
      validate_state(s.state);
    } catch (const ValidationError& e) {
      violations.push_back(step_msg(s.index, e.what()));
    }
    if (t.tag == TaskKind::kCc) {
      if (!s.expert_action.has_value()) {
        violations.push_back(step_msg(s.index, "missing expert_action on CC step"));
      } else if (s.expert_action->tag() != TaskKind::kCc) {
        violations.push_back(step_msg(s.index, "expert_action tag mismatch"));
      }
    } else if (s.expert_action.has_value()) {
      violations.push_back(step_msg(s.index, "expert_action present on non-CC step"));
    }
  }

  // Suffix-sum consistency of the stored returns.
  bool rewards_finite = true;
  std::vector<double> rewards;
  rewards.reserve(t.steps.size());
  for (const auto& s : t.steps) {
    rewards.push_back(s.reward);
    if (!std::isfinite(s.reward)) rewards_finite = false;
  }
  if (rewards_finite) {
    const std::vector<double> rtg = compute_return_to_go(rewards);
    for (size_t i = 0; i < t.steps.size(); ++i) {
      if (!nearly_equal(rtg[i], t.steps[i].return_to_go)) {
        violations.push_back(
            step_msg(t.steps[i].index, "return_to_go does not equal the reward suffix sum"));
      }
    }
  }

  // Feature shape consistency across steps within the trajectory.
  const TaskState& first = t.steps.front().state;
  for (size_t i = 1; i < t.steps.size(); ++i) {
    const TaskState& s = t.steps[i].state;
    bool same = s.scalars.size() == first.scalars.size() &&
                s.vectors.size() == first.vectors.size();
    if (same) {
      for (size_t k = 0; k < s.scalars.size(); ++k) {
        if (s.scalars[k].name != first.scalars[k].name) same = false;
      }
      for (size_t k = 0; k < s.vectors.size(); ++k) {
        if (s.vectors[k].name != first.vectors[k].name ||
            s.vectors[k].values.size() != first.vectors[k].values.size()) {
          same = false;
        }
      }
    }
    if (!same) {
      violations.push_back(step_msg(t.steps[i].index, "feature layout differs from step 0"));
    }
  }

  return violations;
}

}  // namespace tb
