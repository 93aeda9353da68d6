// Copyright 2026 The fogcolonies Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fogcolony/scenario.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace fogcolony {

namespace {

std::string scenario_label(const ScenarioConfig& config) {
  return std::to_string(config.infra.devices) + "nodes" + std::to_string(config.workload.apps) +
         "apps";
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << content;
}

std::string trace_csv(const std::vector<GenerationTrace>& traces) {
  std::ostringstream out;
  out << "generation,individual,response_time,placement_time,front_flag\n";
  for (const auto& trace : traces) {
    std::vector<char> in_front(trace.objectives.size(), 0);
    for (int idx : trace.front) in_front[idx] = 1;
    for (std::size_t i = 0; i < trace.objectives.size(); ++i) {
      out << trace.generation << "," << i << ","
          << format_double(trace.objectives[i].response_time) << ","
          << format_double(trace.objectives[i].placement_time) << ","
          << static_cast<int>(in_front[i]) << "\n";
    }
  }
  return out.str();
}

std::string metrics_csv(const ScenarioConfig& config, const FrontSummary& summary) {
  std::ostringstream out;
  out << "scenario,s_metric,first_dominating_generation,"
      << "c_ga_one_colony,c_ga_fixed_size,c_one_colony_ga,c_fixed_size_ga\n";
  out << scenario_label(config) << "," << format_double(summary.s_metric) << ",";
  if (summary.first_dominating) out << *summary.first_dominating;
  else out << "never";
  out << "," << format_double(summary.coverage_vs.at("one-colony")) << ","
      << format_double(summary.coverage_vs.at("fixed-size")) << ","
      << format_double(summary.coverage_vs.at("one-colony-vs-ga")) << ","
      << format_double(summary.coverage_vs.at("fixed-size-vs-ga")) << "\n";
  return out.str();
}

json objectives_json(const ObjectiveVector& o) {
  return json{{"response_time", o.response_time}, {"placement_time", o.placement_time}};
}

ObjectiveVector objectives_from_json(const json& j) {
  return ObjectiveVector{j.at("response_time").get<double>(),
                         j.at("placement_time").get<double>()};
}

json config_json(const ScenarioConfig& c) {
  return json{
      {"infrastructure",
       {{"devices", c.infra.devices},
        {"attach_m", c.infra.attach_m},
        {"latency_min", c.infra.latency_min},
        {"latency_max", c.infra.latency_max},
        {"capacity_min", c.infra.capacity_min},
        {"capacity_max", c.infra.capacity_max},
        {"gateway_fraction", c.infra.gateway_fraction},
        {"cloud_latency", c.infra.cloud_latency}}},
      {"application",
       {{"count", c.workload.apps},
        {"services_min", c.workload.services_min},
        {"services_max", c.workload.services_max},
        {"resources_min", c.workload.req_min},
        {"resources_max", c.workload.req_max}}},
      {"user",
       {{"popularity_max", c.workload.popularity_max},
        {"inter_request_min", c.workload.inter_request_min},
        {"inter_request_max", c.workload.inter_request_max}}},
      {"genetic",
       {{"population", c.ga.pop_size},
        {"generations", c.ga.gen_num},
        {"p_crossover", c.ga.p_cross},
        {"p_mutation", c.ga.p_mut},
        {"p_mutation_join", c.ga.p_mut_join},
        {"p_mutation_split", c.ga.p_mut_split},
        {"p_repair_agglomerative", c.ga.p_rep_agg},
        {"initial_split_prob", c.ga.split_prob_init}}},
      {"experiment",
       {{"seed", c.seed},
        {"fitness_mode", c.mode == FitnessMode::kCostModel ? "cost-model" : "wall-clock"},
        {"fixed_colony_size", c.fixed_colony_size},
        {"output", c.output_dir}}}};
}

struct TraceFile {
  std::vector<GenerationTrace> traces;
};

TraceFile read_trace_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path.string());
  TraceFile out;
  std::string line;
  std::getline(in, line);  // header
  std::map<int, GenerationTrace> by_generation;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 5) throw std::runtime_error("malformed trace row: " + line);
    const int gen = std::stoi(fields[0]);
    auto& trace = by_generation[gen];
    trace.generation = gen;
    const int index = static_cast<int>(trace.objectives.size());
    trace.objectives.push_back({std::stod(fields[2]), std::stod(fields[3])});
    if (fields[4] == "1") trace.front.push_back(index);
  }
  for (auto& [gen, trace] : by_generation) {
    (void)gen;
    out.traces.push_back(std::move(trace));
  }
  return out;
}

// Minimal scatter plot; kinds: population (grey), front (orange), baselines
// (crosses), smallED (star-ish diamond).
std::string scatter_svg(const std::vector<GenerationTrace>& traces, std::size_t index,
                        const ObjectiveVector& one_colony, const ObjectiveVector& fixed_size,
                        const ObjectiveVector& small_ed) {
  const auto& trace = traces.at(index);
  double x_min = one_colony.response_time, x_max = one_colony.response_time;
  double y_min = one_colony.placement_time, y_max = one_colony.placement_time;
  auto widen = [&](const ObjectiveVector& p) {
    x_min = std::min(x_min, p.response_time);
    x_max = std::max(x_max, p.response_time);
    y_min = std::min(y_min, p.placement_time);
    y_max = std::max(y_max, p.placement_time);
  };
  widen(fixed_size);
  for (const auto& p : trace.objectives) widen(p);
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;

  const double width = 640, height = 480, margin = 48;
  auto sx = [&](double v) {
    return margin + (v - x_min) / (x_max - x_min) * (width - 2 * margin);
  };
  auto sy = [&](double v) {
    return height - margin - (v - y_min) / (y_max - y_min) * (height - 2 * margin);
  };

  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
      << "' viewBox='0 0 " << width << " " << height << "'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  out << "<line x1='" << margin << "' y1='" << height - margin << "' x2='" << width - margin
      << "' y2='" << height - margin << "' stroke='black'/>\n";
  out << "<line x1='" << margin << "' y1='" << margin << "' x2='" << margin << "' y2='"
      << height - margin << "' stroke='black'/>\n";
  out << "<text x='" << width / 2 << "' y='" << height - 12
      << "' font-size='12' text-anchor='middle'>response_time</text>\n";
  out << "<text x='14' y='" << height / 2
      << "' font-size='12' text-anchor='middle' transform='rotate(-90 14 " << height / 2
      << ")'>placement_time</text>\n";
  out << "<text x='" << width / 2 << "' y='20' font-size='12' text-anchor='middle'>generation "
      << trace.generation << "</text>\n";

  std::vector<char> in_front(trace.objectives.size(), 0);
  for (int idx : trace.front) in_front[idx] = 1;
  for (std::size_t i = 0; i < trace.objectives.size(); ++i) {
    const auto& p = trace.objectives[i];
    out << "<circle cx='" << sx(p.response_time) << "' cy='" << sy(p.placement_time)
        << "' r='3' fill='" << (in_front[i] ? "#e66a00" : "#5b8fd6") << "' fill-opacity='0.8'/>\n";
  }
  auto cross = [&](const ObjectiveVector& p, const char* color) {
    const double x = sx(p.response_time), y = sy(p.placement_time);
    out << "<line x1='" << x - 5 << "' y1='" << y - 5 << "' x2='" << x + 5 << "' y2='" << y + 5
        << "' stroke='" << color << "' stroke-width='2'/>\n";
    out << "<line x1='" << x - 5 << "' y1='" << y + 5 << "' x2='" << x + 5 << "' y2='" << y - 5
        << "' stroke='" << color << "' stroke-width='2'/>\n";
  };
  cross(one_colony, "#2a9d2a");
  cross(fixed_size, "#d62727");
  const double x = sx(small_ed.response_time), y = sy(small_ed.placement_time);
  out << "<path d='M " << x << " " << y - 7 << " L " << x + 7 << " " << y << " L " << x << " "
      << y + 7 << " L " << x - 7 << " " << y << " Z' fill='black'/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace

ExperimentResult run_experiment(const ScenarioConfig& raw_config, int threads, bool force) {
  ScenarioConfig config = raw_config;
  config.validate();

  const fs::path dir(config.output_dir);
  if (fs::exists(dir / "result.json") && !force) {
    throw std::runtime_error("result already exists in " + dir.string() +
                             " (use --force to overwrite)");
  }
  fs::create_directories(dir);

  Scenario scenario = generate_scenario(config);
  if (scenario.workload.users.empty()) {
    throw std::runtime_error("generated workload has no users; pick another seed");
  }

  Study study(std::move(scenario), config.mode);
  const auto [one_layout, one_eval] = study.one_colony();
  const auto [fixed_layout, fixed_eval] = study.fixed_size(config.fixed_colony_size);

  GAConfig ga = config.ga;
  ga.master_seed = derive_seed(config.seed, 3);
  const GAResult result = study.run(ga, threads);

  std::vector<ObjectiveVector> front_points;
  front_points.reserve(result.front.size());
  for (const auto& ind : result.front) front_points.push_back(ind.objectives);
  const FrontSummary summary = summarize_front(front_points, result.traces,
                                               one_eval.objectives, fixed_eval.objectives);

  save_scenario(study.scenario(), (dir / "scenario.txt").string());
  write_text(dir / "dendrogram.txt", format_dendrogram(study.dendrogram()));
  write_text(dir / "trace.csv", trace_csv(result.traces));
  write_text(dir / "metrics.csv", metrics_csv(config, summary));

  json front_json = json::array();
  for (const auto& ind : result.front) {
    json colonies = json::array();
    for (int node_id : ind.chromosome.selected_nodes()) {
      const auto& node = study.dendrogram().node(node_id);
      colonies.push_back({{"node", node_id},
                          {"coordinator", node.coordinator},
                          {"devices", node.devices}});
    }
    front_json.push_back({{"chromosome", ind.chromosome.to_string()},
                          {"objectives", objectives_json(ind.objectives)},
                          {"colonies", colonies}});
  }
  // Sparse placement of the smallED pick, replayable against scenario.txt.
  json small_ed_placement = json::array();
  for (const auto& ind : result.front) {
    if (ind.objectives != summary.small_ed) continue;
    const auto eval = study.evaluate(ind.chromosome.selected_nodes());
    for (const auto& colony : eval.placement.colonies) {
      small_ed_placement.push_back(
          {{"colony", colony.colony_node}, {"placed", colony.placed}});
    }
    small_ed_placement.push_back(
        {{"colony", "cloud"}, {"services", eval.placement.cloud_services}});
    break;
  }

  json result_json{
      {"label", scenario_label(config)},
      {"config", config_json(config)},
      {"baselines",
       {{"one_colony", objectives_json(one_eval.objectives)},
        {"fixed_size", objectives_json(fixed_eval.objectives)}}},
      {"front", front_json},
      {"metrics",
       {{"s_metric", summary.s_metric},
        {"first_dominating_generation",
         summary.first_dominating ? json(*summary.first_dominating) : json(nullptr)},
        {"coverage", summary.coverage_vs},
        {"small_ed", objectives_json(summary.small_ed)}}},
      {"small_ed_placement", small_ed_placement}};
  write_text(dir / "result.json", result_json.dump(2) + "\n");

  ExperimentResult out;
  out.config = config;
  out.one_colony = one_eval.objectives;
  out.fixed_size = fixed_eval.objectives;
  out.traces = result.traces;
  out.front = result.front;
  out.summary = summary;
  out.directory = dir.string();
  return out;
}

void export_plot_data(const std::string& result_dir, bool svg) {
  const fs::path dir(result_dir);
  if (!fs::exists(dir / "result.json")) {
    throw std::runtime_error("no result.json under " + result_dir);
  }
  json result_json;
  {
    std::ifstream in(dir / "result.json");
    in >> result_json;
  }
  const auto one_colony = objectives_from_json(result_json.at("baselines").at("one_colony"));
  const auto fixed_size = objectives_from_json(result_json.at("baselines").at("fixed_size"));
  const auto traces = read_trace_csv(dir / "trace.csv").traces;

  const fs::path plot_dir = dir / "plot";
  fs::create_directories(plot_dir);
  for (std::size_t t = 0; t < traces.size(); ++t) {
    const auto& trace = traces[t];
    std::vector<ObjectiveVector> front;
    for (int idx : trace.front) front.push_back(trace.objectives.at(idx));
    const ObjectiveVector small_ed = front.at(select_small_ed(front));

    std::ostringstream out;
    out << "response_time,placement_time,front_flag,kind\n";
    std::vector<char> in_front(trace.objectives.size(), 0);
    for (int idx : trace.front) in_front[idx] = 1;
    for (std::size_t i = 0; i < trace.objectives.size(); ++i) {
      out << format_double(trace.objectives[i].response_time) << ","
          << format_double(trace.objectives[i].placement_time) << ","
          << static_cast<int>(in_front[i]) << ",individual\n";
    }
    out << format_double(one_colony.response_time) << ","
        << format_double(one_colony.placement_time) << ",0,one_colony\n";
    out << format_double(fixed_size.response_time) << ","
        << format_double(fixed_size.placement_time) << ",0,fixed_size\n";
    out << format_double(small_ed.response_time) << "," << format_double(small_ed.placement_time)
        << ",1,small_ed\n";

    char name[32];
    std::snprintf(name, sizeof(name), "gen_%04d.csv", trace.generation);
    write_text(plot_dir / name, out.str());
    if (svg) {
      std::snprintf(name, sizeof(name), "gen_%04d.svg", trace.generation);
      write_text(plot_dir / name, scatter_svg(traces, t, one_colony, fixed_size, small_ed));
    }
  }
}

FrontSummary metrics_from_result(const std::string& result_dir) {
  const fs::path dir(result_dir);
  if (!fs::exists(dir / "result.json")) {
    throw std::runtime_error("no result.json under " + result_dir);
  }
  json result_json;
  {
    std::ifstream in(dir / "result.json");
    in >> result_json;
  }
  const auto one_colony = objectives_from_json(result_json.at("baselines").at("one_colony"));
  const auto fixed_size = objectives_from_json(result_json.at("baselines").at("fixed_size"));
  std::vector<ObjectiveVector> front;
  for (const auto& entry : result_json.at("front")) {
    front.push_back(objectives_from_json(entry.at("objectives")));
  }
  const auto traces = read_trace_csv(dir / "trace.csv").traces;
  return summarize_front(front, traces, one_colony, fixed_size);
}

}  // namespace fogcolony
