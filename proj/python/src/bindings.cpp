#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "hacs/acs.hpp"
#include "hacs/clustering.hpp"
#include "hacs/heuristics.hpp"
#include "hacs/local_search.hpp"
#include "hacs/tsplib.hpp"

namespace py = pybind11;
using namespace hacs;

namespace {

void check_node(const GtspInstance& inst, NodeId v) {
    if (v < 0 || v >= inst.node_count()) throw py::index_error("node id out of range");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hybrid ant colony system for the generalized traveling salesman problem";

    auto base = py::register_exception<Error>(m, "HacsError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<FeasibilityError>(m, "FeasibilityError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<BudgetExceededError>(m, "BudgetExceededError", base.ptr());
    py::register_exception<UsageError>(m, "UsageError", base.ptr());

    py::class_<GtspInstance>(m, "GtspInstance")
        .def(py::init<std::string, std::vector<std::vector<NodeId>>, std::vector<Distance>>(), py::arg("name"),
             py::arg("clusters"), py::arg("matrix"))
        .def_property_readonly("name", &GtspInstance::name)
        .def_property_readonly("node_count", &GtspInstance::node_count)
        .def_property_readonly("cluster_count", &GtspInstance::cluster_count)
        .def("cluster",
             [](const GtspInstance& inst, ClusterId c) {
                 if (c < 0 || c >= inst.cluster_count()) throw py::index_error("cluster id out of range");
                 const auto nodes = inst.cluster(c);
                 return std::vector<NodeId>(nodes.begin(), nodes.end());
             })
        .def("cluster_of",
             [](const GtspInstance& inst, NodeId v) {
                 check_node(inst, v);
                 return inst.cluster_of(v);
             })
        .def("dist",
             [](const GtspInstance& inst, NodeId u, NodeId v) {
                 check_node(inst, u);
                 check_node(inst, v);
                 if (inst.cluster_of(u) == inst.cluster_of(v)) throw py::value_error("nodes share a cluster");
                 return inst.dist(u, v);
             })
        .def("__repr__", [](const GtspInstance& inst) {
            return "<GtspInstance " + inst.name() + " n=" + std::to_string(inst.node_count()) +
                   " m=" + std::to_string(inst.cluster_count()) + ">";
        });

    py::class_<Tour>(m, "Tour")
        .def(py::init<>())
        .def_readwrite("nodes", &Tour::nodes)
        .def_readwrite("weight", &Tour::weight)
        .def("__eq__", [](const Tour& a, const Tour& b) { return a == b; })
        .def("__repr__", [](const Tour& t) { return "<Tour weight=" + std::to_string(t.weight) + ">"; });

    py::enum_<LocalSearchMode>(m, "LocalSearchMode")
        .value("composite", LocalSearchMode::composite)
        .value("three_opt_only", LocalSearchMode::three_opt_only)
        .value("none", LocalSearchMode::none);

    py::enum_<LocalUpdateDenominator>(m, "LocalUpdateDenominator")
        .value("nodes", LocalUpdateDenominator::nodes)
        .value("clusters", LocalUpdateDenominator::clusters);

    py::class_<AcsParams>(m, "AcsParams")
        .def(py::init<>())
        .def_readwrite("beta", &AcsParams::beta)
        .def_readwrite("rho", &AcsParams::rho)
        .def_readwrite("xi", &AcsParams::xi)
        .def_readwrite("q0", &AcsParams::q0)
        .def_readwrite("delta", &AcsParams::delta)
        .def_readwrite("num_ants", &AcsParams::num_ants)
        .def_readwrite("seed", &AcsParams::seed)
        .def_readwrite("local_search", &AcsParams::local_search)
        .def_readwrite("local_update_denominator", &AcsParams::local_update_denominator)
        .def_readwrite("max_iterations", &AcsParams::max_iterations)
        .def_readwrite("max_time_seconds", &AcsParams::max_time_seconds)
        .def("validate", &AcsParams::validate);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("best", &RunResult::best)
        .def_readonly("nn_weight", &RunResult::nn_weight)
        .def_readonly("tau0", &RunResult::tau0)
        .def_readonly("iterations", &RunResult::iterations)
        .def_readonly("seconds", &RunResult::seconds)
        .def_readonly("terminated_by_cap", &RunResult::terminated_by_cap);

    m.def("load_gtsp", &load_gtsp, py::arg("path"));
    m.def("parse_gtsp", [](const std::string& text) { return parse_gtsp(text); }, py::arg("text"));
    m.def(
        "cluster_tsplib",
        [](const std::string& text) {
            const TspData tsp = parse_tsplib(text);
            return write_gtsp(tsp, cluster_instance(tsp));
        },
        py::arg("text"), "Clusters TSPLIB text into m = ceil(n/5) sets and returns the GTSP file text.");

    m.def(
        "tour_weight",
        [](const GtspInstance& inst, const std::vector<NodeId>& nodes) { return tour_weight(inst, nodes); },
        py::arg("instance"), py::arg("nodes"));
    m.def("make_tour", &make_tour, py::arg("instance"), py::arg("nodes"));
    m.def(
        "format_tour", [](const std::vector<NodeId>& nodes) { return format_tour(nodes); }, py::arg("nodes"));

    m.def("nearest_neighbor", &nearest_neighbor, py::arg("instance"));
    m.def(
        "brute_force_optimum", [](const GtspInstance& inst) { return brute_force_optimum(inst); },
        py::arg("instance"));
    m.def("co_optimize", &co_optimize, py::arg("instance"), py::arg("tour"));
    m.def("three_opt", &three_opt, py::arg("instance"), py::arg("tour"));
    m.def("improve", &improve, py::arg("instance"), py::arg("tour"));

    m.def(
        "solve",
        [](const GtspInstance& inst, const AcsParams& params) {
            params.validate();
            py::gil_scoped_release release;
            return run(inst, params);
        },
        py::arg("instance"), py::arg("params") = AcsParams{});
}
