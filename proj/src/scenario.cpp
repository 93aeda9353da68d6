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

#include "fogcolony/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fogcolony {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void config_error(const std::string& source, int line, const std::string& message) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& source, int line, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    config_error(source, line, "expected a number, got '" + value + "'");
  }
}

long long parse_int(const std::string& source, int line, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    config_error(source, line, "expected an integer, got '" + value + "'");
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void ScenarioConfig::validate() const {
  ga.validate();
  if (fixed_colony_size < 1) throw std::invalid_argument("fixed_colony_size must be >= 1");
  if (output_dir.empty()) throw std::invalid_argument("output directory must not be empty");
  // Topology and workload ranges are validated by their generators; fail
  // early here so config errors surface before any work happens.
  if (infra.devices < infra.attach_m + 1 || infra.attach_m < 1) {
    throw std::invalid_argument("devices must be >= attach_m + 1 and attach_m >= 1");
  }
  if (workload.apps < 1) throw std::invalid_argument("application count must be >= 1");
}

ScenarioConfig parse_config_text(std::istream& in, const std::string& source_name) {
  ScenarioConfig config;
  std::string section;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    if (text.front() == '[') {
      if (text.back() != ']') config_error(source_name, line_no, "unterminated section header");
      section = trim(text.substr(1, text.size() - 2));
      if (section != "infrastructure" && section != "application" && section != "user" &&
          section != "genetic" && section != "experiment") {
        config_error(source_name, line_no, "unknown section '" + section + "'");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) config_error(source_name, line_no, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) config_error(source_name, line_no, "empty key or value");
    if (section.empty()) config_error(source_name, line_no, "key outside of any section");

    auto num = [&] { return parse_double(source_name, line_no, value); };
    auto integer = [&] { return parse_int(source_name, line_no, value); };

    if (section == "infrastructure") {
      if (key == "devices") config.infra.devices = static_cast<int>(integer());
      else if (key == "attach_m") config.infra.attach_m = static_cast<int>(integer());
      else if (key == "latency_min") config.infra.latency_min = num();
      else if (key == "latency_max") config.infra.latency_max = num();
      else if (key == "capacity_min") config.infra.capacity_min = num();
      else if (key == "capacity_max") config.infra.capacity_max = num();
      else if (key == "gateway_fraction") config.infra.gateway_fraction = num();
      else if (key == "cloud_latency") config.infra.cloud_latency = num();
      else config_error(source_name, line_no, "unknown key '" + key + "' in [infrastructure]");
    } else if (section == "application") {
      if (key == "count") config.workload.apps = static_cast<int>(integer());
      else if (key == "services_min") config.workload.services_min = static_cast<int>(integer());
      else if (key == "services_max") config.workload.services_max = static_cast<int>(integer());
      else if (key == "resources_min") config.workload.req_min = num();
      else if (key == "resources_max") config.workload.req_max = num();
      else config_error(source_name, line_no, "unknown key '" + key + "' in [application]");
    } else if (section == "user") {
      if (key == "popularity_max") config.workload.popularity_max = num();
      else if (key == "inter_request_min") config.workload.inter_request_min = num();
      else if (key == "inter_request_max") config.workload.inter_request_max = num();
      else config_error(source_name, line_no, "unknown key '" + key + "' in [user]");
    } else if (section == "genetic") {
      if (key == "population") config.ga.pop_size = static_cast<int>(integer());
      else if (key == "generations") config.ga.gen_num = static_cast<int>(integer());
      else if (key == "p_crossover") config.ga.p_cross = num();
      else if (key == "p_mutation") config.ga.p_mut = num();
      else if (key == "p_mutation_join") config.ga.p_mut_join = num();
      else if (key == "p_mutation_split") config.ga.p_mut_split = num();
      else if (key == "p_repair_agglomerative") config.ga.p_rep_agg = num();
      else if (key == "initial_split_prob") config.ga.split_prob_init = num();
      else config_error(source_name, line_no, "unknown key '" + key + "' in [genetic]");
    } else if (section == "experiment") {
      if (key == "seed") config.seed = static_cast<std::uint64_t>(integer());
      else if (key == "fixed_colony_size") config.fixed_colony_size = static_cast<int>(integer());
      else if (key == "output") config.output_dir = value;
      else if (key == "fitness_mode") {
        if (value == "cost-model") config.mode = FitnessMode::kCostModel;
        else if (value == "wall-clock") config.mode = FitnessMode::kWallClock;
        else config_error(source_name, line_no, "fitness_mode must be cost-model or wall-clock");
      } else {
        config_error(source_name, line_no, "unknown key '" + key + "' in [experiment]");
      }
    }
  }
  return config;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config_text(in, path);
}

Scenario generate_scenario(const ScenarioConfig& config) {
  Scenario scenario;
  scenario.infra = generate_topology(config.infra, derive_seed(config.seed, 1));
  scenario.workload = generate_workload(scenario.infra, config.workload, derive_seed(config.seed, 2));
  return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
  std::ostringstream out;
  out << "# fogcolonies scenario\n";
  out << "cloud_latency " << format_double(scenario.infra.cloud_latency()) << "\n";
  out << "devices " << scenario.infra.size() << "\n";
  for (const auto& dev : scenario.infra.devices()) {
    out << "device " << dev.id << " " << format_double(dev.resource_capacity) << " "
        << (dev.is_gateway ? 1 : 0) << "\n";
  }
  out << "links " << scenario.infra.links().size() << "\n";
  for (const auto& link : scenario.infra.links()) {
    out << "link " << link.a << " " << link.b << " " << format_double(link.latency) << "\n";
  }
  out << "apps " << scenario.workload.apps.size() << "\n";
  for (const auto& app : scenario.workload.apps) {
    out << "app " << app.id << " " << app.root_service << "\n";
    for (const auto& svc : app.services) {
      out << "service " << svc.id << " " << svc.app_id << " " << format_double(svc.resource_req)
          << "\n";
    }
    for (const auto& [from, to] : app.requests) {
      out << "request " << from << " " << to << "\n";
    }
  }
  out << "users " << scenario.workload.users.size() << "\n";
  for (const auto& user : scenario.workload.users) {
    out << "user " << user.id << " " << user.app_id << " " << user.gateway_device << " "
        << format_double(user.request_rate) << "\n";
  }
  return out.str();
}

Scenario parse_scenario(std::istream& in) {
  double cloud_latency = 0.0;
  std::vector<FogDevice> devices;
  std::vector<NetworkLink> links;
  Workload workload;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    std::istringstream row(text);
    std::string tag;
    row >> tag;
    auto fail = [&]() {
      throw std::runtime_error("scenario line " + std::to_string(line_no) + ": malformed '" +
                               tag + "' entry");
    };
    if (tag == "cloud_latency") {
      if (!(row >> cloud_latency)) fail();
    } else if (tag == "devices" || tag == "links" || tag == "apps" || tag == "users") {
      long long count = 0;
      if (!(row >> count)) fail();
    } else if (tag == "device") {
      FogDevice dev;
      int gateway = 0;
      if (!(row >> dev.id >> dev.resource_capacity >> gateway)) fail();
      dev.is_gateway = gateway != 0;
      devices.push_back(dev);
    } else if (tag == "link") {
      NetworkLink link;
      if (!(row >> link.a >> link.b >> link.latency)) fail();
      links.push_back(link);
    } else if (tag == "app") {
      Application app;
      if (!(row >> app.id >> app.root_service)) fail();
      workload.apps.push_back(std::move(app));
    } else if (tag == "service") {
      Service svc;
      if (!(row >> svc.id >> svc.app_id >> svc.resource_req)) fail();
      if (workload.apps.empty()) fail();
      workload.apps.back().services.push_back(svc);
    } else if (tag == "request") {
      int from = 0, to = 0;
      if (!(row >> from >> to)) fail();
      if (workload.apps.empty()) fail();
      workload.apps.back().requests.emplace_back(from, to);
    } else if (tag == "user") {
      User user;
      if (!(row >> user.id >> user.app_id >> user.gateway_device >> user.request_rate)) fail();
      workload.users.push_back(user);
    } else {
      throw std::runtime_error("scenario line " + std::to_string(line_no) + ": unknown tag '" +
                               tag + "'");
    }
  }
  Scenario scenario;
  scenario.infra = Infrastructure(std::move(devices), std::move(links), cloud_latency);
  scenario.workload = std::move(workload);
  return scenario;
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write scenario file: " + path);
  out << serialize_scenario(scenario);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  return parse_scenario(in);
}

Study::Study(Scenario scenario, FitnessMode mode)
    : scenario_(std::move(scenario)),
      mode_(mode),
      dendro_(build_dendrogram_with_coordinators(scenario_.infra)),
      distances_(scenario_.infra),
      colony_distances_(std::make_unique<ColonyDistanceCache>(scenario_.infra, dendro_)) {}

EvalContext Study::context() const {
  return EvalContext{scenario_.infra, scenario_.workload, dendro_,
                     distances_,      *colony_distances_, mode_};
}

Evaluation Study::evaluate(const std::vector<int>& layout_nodes) const {
  return evaluate_layout(layout_nodes, context());
}

Evaluation Study::evaluate_chromosome(const Chromosome& chromosome) const {
  const auto report = is_valid(chromosome, dendro_);
  if (!report.valid) throw std::invalid_argument("chromosome is not a valid layout");
  return evaluate(chromosome.selected_nodes());
}

GAResult Study::run(const GAConfig& config, int threads) const {
  return run_nsga2(context(), config, threads);
}

std::pair<std::vector<int>, Evaluation> Study::one_colony() const {
  return baseline_one_colony(context());
}

std::pair<std::vector<int>, Evaluation> Study::fixed_size(int target_size) const {
  return baseline_fixed_size(context(), target_size);
}

}  // namespace fogcolony
