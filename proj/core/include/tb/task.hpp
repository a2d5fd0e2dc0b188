#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tb {

enum class TaskKind { kAbr, kCjs, kCc };

std::string_view to_string(TaskKind tag);
TaskKind task_kind_from_string(std::string_view s);

struct NamedScalar {
  std::string name;
  double value = 0.0;
  bool operator==(const NamedScalar&) const = default;
};

struct NamedSeries {
  std::string name;
  std::vector<double> values;
  bool operator==(const NamedSeries&) const = default;
};

// Featurized view of one runnable stage of a DAG job. The four work features
// feed the policy model; ids, arrival and the unstarted count let rule
// policies form decisions from the same snapshot.
struct DagStageFeature {
  int job_id = 0;
  int stage_id = 0;
  double job_arrival = 0.0;
  int unstarted_tasks = 0;
  double remaining_task_seconds = 0.0;
  double num_tasks = 0.0;
  double descendant_work = 0.0;
  double depth = 0.0;
  bool operator==(const DagStageFeature&) const = default;
};

struct DagJobSummary {
  int job_id = 0;
  double arrival = 0.0;
  int executors_held = 0;
  bool operator==(const DagJobSummary&) const = default;
};

struct DagSnapshot {
  std::vector<DagStageFeature> stages;  // runnable stages only
  std::vector<DagJobSummary> jobs;      // jobs currently in the system
  bool operator==(const DagSnapshot&) const = default;
};

// Task-tagged observation. Feature names and order are fixed per task by the
// emitting featurizer; consumers look features up by name.
struct TaskState {
  TaskKind tag = TaskKind::kAbr;
  std::vector<NamedScalar> scalars;
  std::vector<NamedSeries> vectors;
  std::optional<DagSnapshot> graph;  // CJS only

  double scalar(std::string_view name) const;
  const std::vector<double>& series(std::string_view name) const;
  bool has_scalar(std::string_view name) const;

  bool operator==(const TaskState&) const = default;
};

// Throws ValidationError if any scalar/series value is non-finite, or if a
// graph is attached to a non-CJS state.
void validate_state(const TaskState& s);

struct AbrAction {
  int bitrate_index = 0;
  bool operator==(const AbrAction&) const = default;
};

struct CjsAction {
  int stage_id = 0;
  int executor_count = 1;
  bool operator==(const CjsAction&) const = default;
};

struct CcAction {
  double send_rate_mbps = 0.0;
  bool operator==(const CcAction&) const = default;
};

// Tagged action; the variant alternative always matches tag().
class TaskAction {
 public:
  TaskAction() = default;
  static TaskAction abr(int bitrate_index);
  static TaskAction cjs(int stage_id, int executor_count);
  static TaskAction cc(double send_rate_mbps);

  TaskKind tag() const;
  const AbrAction& as_abr() const;
  const CjsAction& as_cjs() const;
  const CcAction& as_cc() const;

  bool operator==(const TaskAction&) const = default;

 private:
  std::variant<AbrAction, CjsAction, CcAction> value_;
};

}  // namespace tb
