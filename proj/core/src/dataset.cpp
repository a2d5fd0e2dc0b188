#include "tb/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "tb/error.hpp"

namespace tb {
namespace {

using nlohmann::json;

json state_to_json(const TaskState& s) {
  json j;
  j["tag"] = std::string(to_string(s.tag));
  // Scalars and series are stored as ordered [name, value] pairs: feature
  // order is part of the state contract and JSON objects would re-sort it.
  json scalars = json::array();
  for (const auto& sc : s.scalars) scalars.push_back(json::array({sc.name, sc.value}));
  j["scalars"] = std::move(scalars);
  json vectors = json::array();
  for (const auto& se : s.vectors) vectors.push_back(json::array({se.name, se.values}));
  j["vectors"] = std::move(vectors);
  if (s.graph.has_value()) {
    json stages = json::array();
    for (const auto& st : s.graph->stages) {
      stages.push_back({{"job", st.job_id},
                        {"stage", st.stage_id},
                        {"arrival", st.job_arrival},
                        {"unstarted", st.unstarted_tasks},
                        {"remaining_seconds", st.remaining_task_seconds},
                        {"num_tasks", st.num_tasks},
                        {"descendant_work", st.descendant_work},
                        {"depth", st.depth}});
    }
    json jobs = json::array();
    for (const auto& jb : s.graph->jobs) {
      jobs.push_back({{"job", jb.job_id}, {"arrival", jb.arrival}, {"held", jb.executors_held}});
    }
    j["graph"] = {{"stages", std::move(stages)}, {"jobs", std::move(jobs)}};
  }
  return j;
}

TaskState state_from_json(const json& j) {
  TaskState s;
  s.tag = task_kind_from_string(j.at("tag").get<std::string>());
  for (const auto& sc : j.at("scalars")) {
    s.scalars.push_back({sc.at(0).get<std::string>(), sc.at(1).get<double>()});
  }
  for (const auto& se : j.at("vectors")) {
    s.vectors.push_back({se.at(0).get<std::string>(), se.at(1).get<std::vector<double>>()});
  }
  if (j.contains("graph")) {
    DagSnapshot g;
    for (const auto& st : j.at("graph").at("stages")) {
      DagStageFeature f;
      f.job_id = st.at("job").get<int>();
      f.stage_id = st.at("stage").get<int>();
      f.job_arrival = st.at("arrival").get<double>();
      f.unstarted_tasks = st.at("unstarted").get<int>();
      f.remaining_task_seconds = st.at("remaining_seconds").get<double>();
      f.num_tasks = st.at("num_tasks").get<double>();
      f.descendant_work = st.at("descendant_work").get<double>();
      f.depth = st.at("depth").get<double>();
      g.stages.push_back(f);
    }
    for (const auto& jb : j.at("graph").at("jobs")) {
      g.jobs.push_back({jb.at("job").get<int>(), jb.at("arrival").get<double>(),
                        jb.at("held").get<int>()});
    }
    s.graph = std::move(g);
  }
  return s;
}

json action_to_json(const TaskAction& a) {
  switch (a.tag()) {
    case TaskKind::kAbr:
      return {{"kind", "abr"}, {"bitrate_index", a.as_abr().bitrate_index}};
    case TaskKind::kCjs:
      return {{"kind", "cjs"},
              {"stage_id", a.as_cjs().stage_id},
              {"executors", a.as_cjs().executor_count}};
    case TaskKind::kCc:
      return {{"kind", "cc"}, {"rate", a.as_cc().send_rate_mbps}};
  }
  throw ValidationError("unknown action tag");
}

TaskAction action_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "abr") return TaskAction::abr(j.at("bitrate_index").get<int>());
  if (kind == "cjs") {
    return TaskAction::cjs(j.at("stage_id").get<int>(), j.at("executors").get<int>());
  }
  if (kind == "cc") return TaskAction::cc(j.at("rate").get<double>());
  throw IoError("unknown action kind '" + kind + "'");
}

json trajectory_to_json(const Trajectory& t) {
  json j;
  j["record"] = "trajectory";
  j["id"] = t.id;
  j["tag"] = std::string(to_string(t.tag));
  j["env"] = {{"id", t.env.env_id}, {"seed", t.env.seed}};
  j["policy"] = t.behavior_policy;
  json steps = json::array();
  for (const auto& s : t.steps) {
    json js;
    js["i"] = s.index;
    js["reward"] = s.reward;
    js["rtg"] = s.return_to_go;
    js["action"] = action_to_json(s.action);
    if (s.expert_action.has_value()) js["expert"] = action_to_json(*s.expert_action);
    js["state"] = state_to_json(s.state);
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

Trajectory trajectory_from_json(const json& j) {
  Trajectory t;
  t.id = j.at("id").get<std::string>();
  t.tag = task_kind_from_string(j.at("tag").get<std::string>());
  t.env.env_id = j.at("env").at("id").get<std::string>();
  t.env.seed = j.at("env").at("seed").get<std::uint64_t>();
  t.behavior_policy = j.at("policy").get<std::string>();
  for (const auto& js : j.at("steps")) {
    TransitionStep s;
    s.index = js.at("i").get<int>();
    s.reward = js.at("reward").get<double>();
    s.return_to_go = js.at("rtg").get<double>();
    s.action = action_from_json(js.at("action"));
    if (js.contains("expert")) s.expert_action = action_from_json(js.at("expert"));
    s.state = state_from_json(js.at("state"));
    t.steps.push_back(std::move(s));
  }
  return t;
}

}  // namespace

const std::string& ExperienceDataset::schema_version() const {
  static const std::string v = kSchemaVersion;
  return v;
}

void ExperienceDataset::add(Trajectory t) {
  if (t.tag != tag_) {
    throw ValidationError("trajectory tag " + std::string(to_string(t.tag)) +
                          " does not match dataset tag " + std::string(to_string(tag_)));
  }
  const std::vector<std::string> violations = validate_trajectory(t);
  if (!violations.empty()) {
    throw ValidationError("invalid trajectory '" + t.id + "': " + violations.front());
  }
  trajectories_.push_back(std::move(t));
}

DatasetSummary ExperienceDataset::summary() const {
  DatasetSummary s;
  s.trajectory_count = trajectories_.size();
  if (trajectories_.empty()) return s;
  s.return_min = std::numeric_limits<double>::infinity();
  s.return_max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const auto& t : trajectories_) {
    s.step_count += t.steps.size();
    const double r = t.total_return();
    s.return_min = std::min(s.return_min, r);
    s.return_max = std::max(s.return_max, r);
    sum += r;
  }
  s.return_mean = sum / static_cast<double>(trajectories_.size());
  return s;
}

struct ExperienceWriter::Impl {
  std::ofstream out;
  bool closed = false;
};

ExperienceWriter::ExperienceWriter(const std::string& path, TaskKind tag)
    : impl_(std::make_unique<Impl>()) {
  impl_->out.open(path, std::ios::binary | std::ios::trunc);
  if (!impl_->out) throw IoError("cannot open '" + path + "' for writing");
  json header = {{"record", "header"},
                 {"schema", ExperienceDataset::kSchemaVersion},
                 {"tag", std::string(to_string(tag))}};
  impl_->out << header.dump() << '\n';
}

ExperienceWriter::~ExperienceWriter() {
  try {
    close();
  } catch (...) {
  }
}

void ExperienceWriter::append(const Trajectory& t) {
  if (impl_->closed) throw IoError("writer already closed");
  impl_->out << trajectory_to_json(t).dump() << '\n';
  if (!impl_->out) throw IoError("write failed");
}

void ExperienceWriter::close() {
  if (impl_->closed) return;
  impl_->out.flush();
  if (!impl_->out) throw IoError("flush failed");
  impl_->out.close();
  impl_->closed = true;
}

void save_dataset(const ExperienceDataset& dataset, const std::string& path) {
  ExperienceWriter w(path, dataset.tag());
  for (const auto& t : dataset.trajectories()) w.append(t);
  w.close();
}

ExperienceDataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path + "': empty file, missing header");

  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception& e) {
    throw IoError("'" + path + "' line 1: bad header: " + e.what());
  }
  if (header.value("record", "") != "header") {
    throw IoError("'" + path + "': first record is not a header");
  }
  const std::string schema = header.value("schema", "");
  if (schema != ExperienceDataset::kSchemaVersion) {
    throw IoError("'" + path + "': schema version '" + schema + "' does not match '" +
                  ExperienceDataset::kSchemaVersion + "'");
  }

  TaskKind tag;
  try {
    tag = task_kind_from_string(header.at("tag").get<std::string>());
  } catch (const std::exception& e) {
    throw IoError("'" + path + "': bad header tag: " + std::string(e.what()));
  }

  ExperienceDataset ds(tag);
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw IoError("'" + path + "' line " + std::to_string(line_no) +
                    ": truncated or malformed record: " + e.what());
    }
    if (j.value("record", "") != "trajectory") {
      throw IoError("'" + path + "' line " + std::to_string(line_no) + ": unexpected record type");
    }
    Trajectory t;
    try {
      t = trajectory_from_json(j);
    } catch (const json::exception& e) {
      throw IoError("'" + path + "' line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      ds.add(std::move(t));
    } catch (const ValidationError& e) {
      throw IoError("'" + path + "' line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return ds;
}

}  // namespace tb
