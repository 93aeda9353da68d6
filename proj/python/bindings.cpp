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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "fogcolony/scenario.hpp"

namespace py = pybind11;
using namespace fogcolony;

namespace {

// The C++ operators take an explicit RNG stream; python callers pass a seed.
template <typename Fn>
auto with_seed(Fn fn) {
  return fn;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fog colony layout optimization: hierarchical-clustering dendrogram plus NSGA-II";

  py::class_<FogDevice>(m, "FogDevice")
      .def(py::init<>())
      .def_readwrite("id", &FogDevice::id)
      .def_readwrite("resource_capacity", &FogDevice::resource_capacity)
      .def_readwrite("is_gateway", &FogDevice::is_gateway);

  py::class_<NetworkLink>(m, "NetworkLink")
      .def(py::init<>())
      .def_readwrite("a", &NetworkLink::a)
      .def_readwrite("b", &NetworkLink::b)
      .def_readwrite("latency", &NetworkLink::latency);

  py::class_<Infrastructure>(m, "Infrastructure")
      .def(py::init<std::vector<FogDevice>, std::vector<NetworkLink>, double>(),
           py::arg("devices"), py::arg("links"), py::arg("cloud_latency"))
      .def_property_readonly("devices", &Infrastructure::devices)
      .def_property_readonly("links", &Infrastructure::links)
      .def_property_readonly("cloud_latency", &Infrastructure::cloud_latency)
      .def("__len__", &Infrastructure::size)
      .def("gateways", &Infrastructure::gateways)
      .def("connected", &Infrastructure::connected);

  py::class_<TopologyParams>(m, "TopologyParams")
      .def(py::init<>())
      .def_readwrite("devices", &TopologyParams::devices)
      .def_readwrite("attach_m", &TopologyParams::attach_m)
      .def_readwrite("latency_min", &TopologyParams::latency_min)
      .def_readwrite("latency_max", &TopologyParams::latency_max)
      .def_readwrite("capacity_min", &TopologyParams::capacity_min)
      .def_readwrite("capacity_max", &TopologyParams::capacity_max)
      .def_readwrite("gateway_fraction", &TopologyParams::gateway_fraction)
      .def_readwrite("cloud_latency", &TopologyParams::cloud_latency);

  m.def("generate_topology", &generate_topology, py::arg("params"), py::arg("seed"));
  m.def(
      "shortest_lat",
      [](const Infrastructure& infra, DeviceId a, DeviceId b,
         std::optional<std::vector<DeviceId>> restrict_to) {
        return shortest_lat(infra, a, b, restrict_to ? &*restrict_to : nullptr);
      },
      py::arg("infra"), py::arg("a"), py::arg("b"), py::arg("restrict_to") = py::none());
  m.def("betweenness", &betweenness, py::arg("infra"), py::arg("members"));

  py::class_<Service>(m, "Service")
      .def(py::init<>())
      .def_readwrite("id", &Service::id)
      .def_readwrite("app_id", &Service::app_id)
      .def_readwrite("resource_req", &Service::resource_req);

  py::class_<Application>(m, "Application")
      .def(py::init<>())
      .def_readwrite("id", &Application::id)
      .def_readwrite("services", &Application::services)
      .def_readwrite("requests", &Application::requests)
      .def_readwrite("root_service", &Application::root_service);

  py::class_<User>(m, "User")
      .def(py::init<>())
      .def_readwrite("id", &User::id)
      .def_readwrite("app_id", &User::app_id)
      .def_readwrite("gateway_device", &User::gateway_device)
      .def_readwrite("request_rate", &User::request_rate);

  py::class_<Workload>(m, "Workload")
      .def(py::init<>())
      .def_readwrite("apps", &Workload::apps)
      .def_readwrite("users", &Workload::users)
      .def("total_services", &Workload::total_services);

  py::class_<WorkloadParams>(m, "WorkloadParams")
      .def(py::init<>())
      .def_readwrite("apps", &WorkloadParams::apps)
      .def_readwrite("services_min", &WorkloadParams::services_min)
      .def_readwrite("services_max", &WorkloadParams::services_max)
      .def_readwrite("req_min", &WorkloadParams::req_min)
      .def_readwrite("req_max", &WorkloadParams::req_max)
      .def_readwrite("popularity_max", &WorkloadParams::popularity_max)
      .def_readwrite("inter_request_min", &WorkloadParams::inter_request_min)
      .def_readwrite("inter_request_max", &WorkloadParams::inter_request_max);

  m.def("generate_workload", &generate_workload, py::arg("infra"), py::arg("params"),
        py::arg("seed"));
  m.def("app_request_pairs", &app_request_pairs, py::arg("app"));

  py::class_<CandidateColony>(m, "CandidateColony")
      .def_readonly("id", &CandidateColony::id)
      .def_readonly("devices", &CandidateColony::devices)
      .def_readonly("children", &CandidateColony::children)
      .def_readonly("parent", &CandidateColony::parent)
      .def_readonly("coordinator", &CandidateColony::coordinator)
      .def_readonly("height", &CandidateColony::height);

  py::class_<Dendrogram>(m, "Dendrogram")
      .def_readonly("nodes", &Dendrogram::nodes)
      .def_readonly("root", &Dendrogram::root)
      .def_readonly("device_count", &Dendrogram::device_count)
      .def("__len__", &Dendrogram::size)
      .def("node", &Dendrogram::node, py::return_value_policy::reference_internal)
      .def("descendants",
           [](const Dendrogram& d, int id) { return d.descendants(id); });

  m.def("build_dendrogram", &build_dendrogram, py::arg("infra"));
  m.def("assign_coordinators", &assign_coordinators, py::arg("dendro"), py::arg("infra"));
  m.def("build_dendrogram_with_coordinators", &build_dendrogram_with_coordinators,
        py::arg("infra"));
  m.def("format_dendrogram", &format_dendrogram, py::arg("dendro"));

  py::class_<Chromosome>(m, "Chromosome")
      .def(py::init<>())
      .def(py::init(&Chromosome::from_string), py::arg("bits"))
      .def_readwrite("selected", &Chromosome::selected)
      .def("selected_nodes", &Chromosome::selected_nodes)
      .def("__str__", &Chromosome::to_string)
      .def("__eq__", [](const Chromosome& a, const Chromosome& b) { return a == b; });

  py::class_<ValidityReport>(m, "ValidityReport")
      .def_readonly("valid", &ValidityReport::valid)
      .def_readonly("duplicated", &ValidityReport::duplicated)
      .def_readonly("missing", &ValidityReport::missing)
      .def("__bool__", [](const ValidityReport& r) { return r.valid; });

  m.def("is_valid", &is_valid, py::arg("chromosome"), py::arg("dendro"));
  m.def("repair_agglomerative", &repair_agglomerative, py::arg("chromosome"), py::arg("dendro"));
  m.def("repair_divisive", &repair_divisive, py::arg("chromosome"), py::arg("dendro"));
  m.def(
      "random_layout",
      [](const Dendrogram& d, double split_prob, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return random_layout(d, split_prob, rng);
      },
      py::arg("dendro"), py::arg("split_prob"), py::arg("seed"));
  m.def(
      "crossover_subtree",
      [](const Chromosome& a, const Chromosome& b, const Dendrogram& d, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return crossover_subtree(a, b, d, rng);
      },
      py::arg("a"), py::arg("b"), py::arg("dendro"), py::arg("seed"));
  m.def(
      "mutate_join",
      [](const Chromosome& c, const Dendrogram& d, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return mutate_join(c, d, rng);
      },
      py::arg("chromosome"), py::arg("dendro"), py::arg("seed"));
  m.def(
      "mutate_split",
      [](const Chromosome& c, const Dendrogram& d, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return mutate_split(c, d, rng);
      },
      py::arg("chromosome"), py::arg("dendro"), py::arg("seed"));

  py::enum_<FitnessMode>(m, "FitnessMode")
      .value("COST_MODEL", FitnessMode::kCostModel)
      .value("WALL_CLOCK", FitnessMode::kWallClock);

  py::class_<ObjectiveVector>(m, "ObjectiveVector")
      .def(py::init<>())
      .def(py::init([](double rt, double pt) {
             return ObjectiveVector{rt, pt};
           }),
           py::arg("response_time"), py::arg("placement_time"))
      .def_readwrite("response_time", &ObjectiveVector::response_time)
      .def_readwrite("placement_time", &ObjectiveVector::placement_time)
      .def("__eq__",
           [](const ObjectiveVector& a, const ObjectiveVector& b) { return a == b; })
      .def("__repr__", [](const ObjectiveVector& o) {
        std::ostringstream out;
        out << "ObjectiveVector(response_time=" << o.response_time
            << ", placement_time=" << o.placement_time << ")";
        return out.str();
      });

  m.def("dominates", &dominates, py::arg("x"), py::arg("y"));

  py::class_<PlacementCost>(m, "PlacementCost")
      .def_readonly("fit_checks", &PlacementCost::fit_checks)
      .def_readonly("services_processed", &PlacementCost::services_processed)
      .def_readonly("wall_seconds", &PlacementCost::wall_seconds);

  py::class_<ColonyPlacement>(m, "ColonyPlacement")
      .def_readonly("colony_node", &ColonyPlacement::colony_node)
      .def_readonly("placed", &ColonyPlacement::placed)
      .def_readonly("cost", &ColonyPlacement::cost);

  py::class_<LayoutPlacement>(m, "LayoutPlacement")
      .def_readonly("colonies", &LayoutPlacement::colonies)
      .def_readonly("cloud_services", &LayoutPlacement::cloud_services);

  py::class_<RoutingStats>(m, "RoutingStats")
      .def_readonly("intra_pairs", &RoutingStats::intra_pairs)
      .def_readonly("inter_pairs", &RoutingStats::inter_pairs)
      .def_readonly("cloud_pairs", &RoutingStats::cloud_pairs);

  py::class_<Evaluation>(m, "Evaluation")
      .def_readonly("objectives", &Evaluation::objectives)
      .def_readonly("placement", &Evaluation::placement)
      .def_readonly("routing", &Evaluation::routing);

  py::class_<GAConfig>(m, "GAConfig")
      .def(py::init<>())
      .def_readwrite("pop_size", &GAConfig::pop_size)
      .def_readwrite("gen_num", &GAConfig::gen_num)
      .def_readwrite("p_cross", &GAConfig::p_cross)
      .def_readwrite("p_mut", &GAConfig::p_mut)
      .def_readwrite("p_mut_join", &GAConfig::p_mut_join)
      .def_readwrite("p_mut_split", &GAConfig::p_mut_split)
      .def_readwrite("p_rep_agg", &GAConfig::p_rep_agg)
      .def_readwrite("split_prob_init", &GAConfig::split_prob_init)
      .def_readwrite("master_seed", &GAConfig::master_seed)
      .def("validate", &GAConfig::validate);

  py::class_<Individual>(m, "Individual")
      .def_readonly("chromosome", &Individual::chromosome)
      .def_readonly("objectives", &Individual::objectives)
      .def_readonly("front_rank", &Individual::front_rank)
      .def_readonly("crowding", &Individual::crowding);

  py::class_<GenerationTrace>(m, "GenerationTrace")
      .def_readonly("generation", &GenerationTrace::generation)
      .def_readonly("objectives", &GenerationTrace::objectives)
      .def_readonly("front", &GenerationTrace::front);

  py::class_<GAResult>(m, "GAResult")
      .def_readonly("population", &GAResult::population)
      .def_readonly("front", &GAResult::front)
      .def_readonly("traces", &GAResult::traces);

  m.def("fast_nondominated_sort", &fast_nondominated_sort, py::arg("points"));
  m.def("crowding_distance", &crowding_distance, py::arg("front"));
  m.def("coverage", &coverage, py::arg("a"), py::arg("b"));
  m.def("s_metric", &s_metric, py::arg("front"), py::arg("reference"));
  m.def("select_small_ed", &select_small_ed, py::arg("front"));
  m.def("first_dominating_generation", &first_dominating_generation, py::arg("traces"),
        py::arg("one_colony"), py::arg("fixed_size"));

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("infra", &Scenario::infra)
      .def_readwrite("workload", &Scenario::workload);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("infra", &ScenarioConfig::infra)
      .def_readwrite("workload", &ScenarioConfig::workload)
      .def_readwrite("ga", &ScenarioConfig::ga)
      .def_readwrite("mode", &ScenarioConfig::mode)
      .def_readwrite("seed", &ScenarioConfig::seed)
      .def_readwrite("fixed_colony_size", &ScenarioConfig::fixed_colony_size)
      .def_readwrite("output_dir", &ScenarioConfig::output_dir)
      .def("validate", &ScenarioConfig::validate);

  m.def("load_config", &load_config, py::arg("path"));
  m.def("generate_scenario", &generate_scenario, py::arg("config"));
  m.def("serialize_scenario", &serialize_scenario, py::arg("scenario"));
  m.def("save_scenario", &save_scenario, py::arg("scenario"), py::arg("path"));
  m.def("load_scenario", &load_scenario, py::arg("path"));

  py::class_<Study>(m, "Study")
      .def(py::init<Scenario, FitnessMode>(), py::arg("scenario"),
           py::arg("mode") = FitnessMode::kCostModel)
      .def_property_readonly("infra", &Study::infra,
                             py::return_value_policy::reference_internal)
      .def_property_readonly("workload", &Study::workload,
                             py::return_value_policy::reference_internal)
      .def_property_readonly("dendrogram", &Study::dendrogram,
                             py::return_value_policy::reference_internal)
      .def("evaluate", &Study::evaluate, py::arg("layout_nodes"))
      .def("evaluate_chromosome", &Study::evaluate_chromosome, py::arg("chromosome"))
      .def("run", &Study::run, py::arg("config"), py::arg("threads") = 1)
      .def("one_colony", &Study::one_colony)
      .def("fixed_size", &Study::fixed_size, py::arg("target_size"));

  py::class_<FrontSummary>(m, "FrontSummary")
      .def_readonly("points", &FrontSummary::points)
      .def_readonly("s_metric", &FrontSummary::s_metric)
      .def_readonly("coverage_vs", &FrontSummary::coverage_vs)
      .def_readonly("first_dominating", &FrontSummary::first_dominating)
      .def_readonly("small_ed", &FrontSummary::small_ed);

  m.def("summarize_front", &summarize_front, py::arg("front"), py::arg("traces"),
        py::arg("one_colony"), py::arg("fixed_size"));

  py::class_<ExperimentResult>(m, "ExperimentResult")
      .def_readonly("config", &ExperimentResult::config)
      .def_readonly("one_colony", &ExperimentResult::one_colony)
      .def_readonly("fixed_size", &ExperimentResult::fixed_size)
      .def_readonly("traces", &ExperimentResult::traces)
      .def_readonly("front", &ExperimentResult::front)
      .def_readonly("summary", &ExperimentResult::summary)
      .def_readonly("directory", &ExperimentResult::directory);

  m.def("run_experiment", &run_experiment, py::arg("config"), py::arg("threads") = 1,
        py::arg("force") = false);
  m.def("export_plot_data", &export_plot_data, py::arg("result_dir"), py::arg("svg") = false);
  m.def("metrics_from_result", &metrics_from_result, py::arg("result_dir"));
}
