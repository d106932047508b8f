#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hurwitz/branch_datum.hpp"
#include "hurwitz/complexity.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/realizability.hpp"

namespace py = pybind11;
using namespace hurwitz;

PYBIND11_MODULE(_hurwitz, m) {
    m.doc() = "Exact complexity of Riemann surfaces via branched covers of the sphere";

    py::enum_<Status>(m, "Status")
        .value("REALIZABLE", Status::Realizable)
        .value("NOT_REALIZABLE", Status::NotRealizable)
        .value("UNKNOWN", Status::Unknown);

    py::class_<BranchDatum>(m, "BranchDatum")
        .def(py::init([](int genus, int degree, std::vector<Partition> partitions) {
                 return make_branch_datum(genus, degree, std::move(partitions));
             }),
             py::arg("genus"), py::arg("degree"), py::arg("partitions"))
        .def_readonly("genus", &BranchDatum::genus)
        .def_readonly("degree", &BranchDatum::degree)
        .def_readonly("partitions", &BranchDatum::partitions)
        .def("__repr__", [](const BranchDatum& d) {
            return "BranchDatum(genus=" + std::to_string(d.genus) +
                   ", degree=" + std::to_string(d.degree) + ", n=" +
                   std::to_string(d.branch_points()) + ")";
        });

    py::class_<Permutation>(m, "Permutation")
        .def(py::init([](std::vector<int> images) {
                 Permutation p{std::move(images)};
                 if (!is_valid_permutation(p)) {
                     throw py::value_error("images is not a bijection on {0,...,d-1}");
                 }
                 return p;
             }),
             py::arg("images"))
        .def_readonly("images", &Permutation::images)
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; });

    py::class_<PermutationTuple>(m, "PermutationTuple")
        .def(py::init<int, std::vector<Permutation>>(), py::arg("degree"), py::arg("perms"))
        .def_readonly("degree", &PermutationTuple::degree)
        .def_readonly("perms", &PermutationTuple::perms);

    py::class_<RealizabilityResult>(m, "RealizabilityResult")
        .def_readonly("status", &RealizabilityResult::status)
        .def_readonly("witness", &RealizabilityResult::witness)
        .def_readonly("nodes_explored", &RealizabilityResult::nodes_explored);

    py::class_<PiMultiple>(m, "PiMultiple")
        .def_readonly("coeff", &PiMultiple::coeff)
        .def("__repr__",
             [](const PiMultiple& v) { return std::to_string(v.coeff) + "*pi"; });

    py::class_<TraceEntry>(m, "TraceEntry")
        .def_readonly("k", &TraceEntry::k)
        .def_readonly("data_count", &TraceEntry::data_count)
        .def_readonly("realizable_found", &TraceEntry::realizable_found);

    py::class_<ComplexityReport>(m, "ComplexityReport")
        .def_readonly("value", &ComplexityReport::value)
        .def_readonly("achieved_by", &ComplexityReport::achieved_by)
        .def_readonly("witness", &ComplexityReport::witness)
        .def_readonly("trace", &ComplexityReport::trace)
        .def_readonly("inconclusive", &ComplexityReport::inconclusive);

    m.def("enumerate_partitions", &enumerate_partitions, py::arg("d"));
    m.def("partition_length", &partition_length, py::arg("p"));
    m.def("is_branching_partition", &is_branching_partition, py::arg("p"));

    m.def("total_length", &total_length, py::arg("datum"));
    m.def("is_compatible", &is_compatible, py::arg("datum"));
    m.def("is_simple_datum", &is_simple_datum, py::arg("datum"));
    m.def("implied_genus", &implied_genus, py::arg("degree"), py::arg("partitions"));

    m.def("cycle_type", &cycle_type, py::arg("p"));
    m.def("total_ramification", &total_ramification, py::arg("t"));
    m.def("is_transitive", &is_transitive, py::arg("t"));
    m.def("verify_witness", &verify_witness, py::arg("t"), py::arg("datum"));

    m.def("find_monodromy", &find_monodromy, py::arg("datum"),
          py::arg("budget") = kDefaultBudget, py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("brute_force_realizable", &brute_force_realizable, py::arg("datum"),
          py::arg("degree_cap") = kOracleDegreeCap,
          py::call_guard<py::gil_scoped_release>());

    m.def("hyperbolic_area_coeff", &hyperbolic_area_coeff, py::arg("n"));
    m.def("cover_complexity", &cover_complexity, py::arg("d"), py::arg("n"));
    m.def("simple_complexity_formula", &simple_complexity_formula, py::arg("g"));
    m.def("hyperelliptic_witness", &hyperelliptic_witness, py::arg("g"));
    m.def("simple_complexity_search", &simple_complexity_search, py::arg("g"),
          py::arg("d_cap") = 6, py::arg("budget") = kDefaultBudget,
          py::call_guard<py::gil_scoped_release>());
    m.def("m_min_search", &m_min_search, py::arg("g"), py::arg("budget") = kDefaultBudget,
          py::call_guard<py::gil_scoped_release>());
    m.def("surface_complexity", &surface_complexity, py::arg("g"),
          py::arg("budget") = kDefaultBudget, py::call_guard<py::gil_scoped_release>());
}
