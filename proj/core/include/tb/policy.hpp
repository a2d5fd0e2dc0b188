#pragma once

#include <map>
#include <memory>
#include <string>

#include "tb/task.hpp"

namespace tb {

// Shared decision interface. Implementations may carry per-flow or per-run
// memory, so one instance drives exactly one episode stream.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  virtual TaskKind tag() const = 0;
  virtual TaskAction act(const TaskState& state) = 0;
};

struct PolicyDescriptor {
  std::string name;
  TaskKind tag = TaskKind::kAbr;
  std::map<std::string, std::string> params;

  // "bba reservoir=5 cushion=10" -> descriptor. Throws ValidationError on a
  // malformed parameter token.
  static PolicyDescriptor parse(const std::string& text, TaskKind tag);
  std::string param_or(const std::string& key, const std::string& fallback) const;
  double param_double(const std::string& key, double fallback) const;
  int param_int(const std::string& key, int fallback) const;
};

}  // namespace tb
