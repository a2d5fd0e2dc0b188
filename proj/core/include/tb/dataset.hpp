#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tb/trajectory.hpp"

namespace tb {

struct DatasetSummary {
  std::size_t trajectory_count = 0;
  std::size_t step_count = 0;
  double return_min = 0.0;
  double return_max = 0.0;
  double return_mean = 0.0;
};

// A single-tag collection of trajectories. Immutable once built except
// through add(), which enforces the tag invariant.
class ExperienceDataset {
 public:
  static constexpr const char* kSchemaVersion = "tb-exp-v1";

  explicit ExperienceDataset(TaskKind tag) : tag_(tag) {}

  TaskKind tag() const { return tag_; }
  const std::string& schema_version() const;
  const std::vector<Trajectory>& trajectories() const { return trajectories_; }
  bool empty() const { return trajectories_.empty(); }

  // Rejects trajectories whose tag (or any nested tag) differs from the
  // dataset tag, and trajectories failing validate_trajectory.
  void add(Trajectory t);

  // Derived from contents, so always consistent with them.
  DatasetSummary summary() const;

 private:
  TaskKind tag_;
  std::vector<Trajectory> trajectories_;
};

// Line-delimited persistence ("tb-exp-v1"): a header record followed by one
// self-describing trajectory record per line. See docs/formats.md.
void save_dataset(const ExperienceDataset& dataset, const std::string& path);
ExperienceDataset load_dataset(const std::string& path);

// Incremental single-writer used by collection runs; readers open the file
// only after close(). Produces byte-identical output to save_dataset.
class ExperienceWriter {
 public:
  ExperienceWriter(const std::string& path, TaskKind tag);
  ~ExperienceWriter();
  void append(const Trajectory& t);
  void close();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tb
