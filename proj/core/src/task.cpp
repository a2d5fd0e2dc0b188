#include "tb/task.hpp"

#include <cmath>

#include "tb/error.hpp"

namespace tb {

std::string_view to_string(TaskKind tag) {
  switch (tag) {
    case TaskKind::kAbr: return "abr";
    case TaskKind::kCjs: return "cjs";
    case TaskKind::kCc: return "cc";
  }
  throw ValidationError("unknown task kind");
}

TaskKind task_kind_from_string(std::string_view s) {
  if (s == "abr") return TaskKind::kAbr;
  if (s == "cjs") return TaskKind::kCjs;
  if (s == "cc") return TaskKind::kCc;
  throw ValidationError("unknown task kind: '" + std::string(s) + "'");
}

double TaskState::scalar(std::string_view name) const {
  for (const auto& s : scalars) {
    if (s.name == name) return s.value;
  }
  throw ValidationError("state has no scalar '" + std::string(name) + "'");
}

bool TaskState::has_scalar(std::string_view name) const {
  for (const auto& s : scalars) {
    if (s.name == name) return true;
  }
  return false;
}

const std::vector<double>& TaskState::series(std::string_view name) const {
  for (const auto& v : vectors) {
    if (v.name == name) return v.values;
  }
  throw ValidationError("state has no series '" + std::string(name) + "'");
}

void validate_state(const TaskState& s) {
  for (const auto& sc : s.scalars) {
    if (!std::isfinite(sc.value)) {
      throw ValidationError("non-finite scalar '" + sc.name + "'");
    }
  }
  for (const auto& se : s.vectors) {
    for (double v : se.values) {
      if (!std::isfinite(v)) {
        throw ValidationError("non-finite value in series '" + se.name + "'");
      }
    }
  }
  if (s.graph.has_value() && s.tag != TaskKind::kCjs) {
    throw ValidationError("graph snapshot on non-cjs state");
  }
}

TaskAction TaskAction::abr(int bitrate_index) {
  TaskAction a;
  a.value_ = AbrAction{bitrate_index};
  return a;
}

TaskAction TaskAction::cjs(int stage_id, int executor_count) {
  TaskAction a;
  a.value_ = CjsAction{stage_id, executor_count};
  return a;
}

TaskAction TaskAction::cc(double send_rate_mbps) {
  TaskAction a;
  a.value_ = CcAction{send_rate_mbps};
  return a;
}

TaskKind TaskAction::tag() const {
  if (std::holds_alternative<AbrAction>(value_)) return TaskKind::kAbr;
  if (std::holds_alternative<CjsAction>(value_)) return TaskKind::kCjs;
  return TaskKind::kCc;
}

const AbrAction& TaskAction::as_abr() const {
  if (const auto* a = std::get_if<AbrAction>(&value_)) return *a;
  throw ValidationError("action is not an ABR action");
}

const CjsAction& TaskAction::as_cjs() const {
  if (const auto* a = std::get_if<CjsAction>(&value_)) return *a;
  throw ValidationError("action is not a CJS action");
}

const CcAction& TaskAction::as_cc() const {
  if (const auto* a = std::get_if<CcAction>(&value_)) return *a;
  throw ValidationError("action is not a CC action");
}

}  // namespace tb
