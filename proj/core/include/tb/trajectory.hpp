#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tb/task.hpp"

namespace tb {

struct EnvDescriptor {
  std::string env_id;
  std::uint64_t seed = 0;
  bool operator==(const EnvDescriptor&) const = default;
};

struct TransitionStep {
  int index = 0;
  TaskState state;
  TaskAction action;
  double reward = 0.0;
  double return_to_go = 0.0;
  std::optional<TaskAction> expert_action;  // present iff tag == CC
  bool operator==(const TransitionStep&) const = default;
};

struct Trajectory {
  std::string id;
  TaskKind tag = TaskKind::kAbr;
  std::vector<TransitionStep> steps;
  EnvDescriptor env;
  std::string behavior_policy;
  bool operator==(const Trajectory&) const = default;

  // Total episode return, i.e. the suffix sum at step 0.
  double total_return() const;
};

// output[i] = sum of rewards[i..end]. Throws ValidationError on non-finite
// input. Empty input yields an empty output.
std::vector<double> compute_return_to_go(const std::vector<double>& rewards);

// Checks every TransitionStep invariant; returns human-readable violations
// (empty means the trajectory is well-formed). Violations are data, not
// faults: nothing throws.
std::vector<std::string> validate_trajectory(const Trajectory& t);

}  // namespace tb
