#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "butson/census.hpp"
#include "butson/constructions.hpp"
#include "butson/existence.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace butson;

namespace {

py::dict certificate(const Verdict& v)
{
    py::dict d;
    for (const auto& [k, x] : v.certificate) d[py::str(k)] = x;
    return d;
}

Attribution attribution(const std::string& s)
{
    if (s == "staged") return Attribution::Staged;
    if (s == "independent") return Attribution::Independent;
    throw std::invalid_argument("attribution must be 'staged' or 'independent'");
}

}  // namespace

PYBIND11_MODULE(_butson, m)
{
    m.doc() = "Group-invariant Butson Hadamard matrices";

    m.def("factorize", [](u64 n) {
        std::vector<std::pair<u64, unsigned>> out;
        for (const auto& pp : factorize(n)) out.emplace_back(pp.prime, pp.exponent);
        return out;
    }, "n"_a);
    m.def("nu", &nu, "p"_a, "n"_a);
    m.def("ord", &ord, "modulus"_a, "base"_a);
    m.def("squarefree_part", &squarefree_part, "n"_a);
    m.def("is_self_conjugate", &is_self_conjugate, "p"_a, "n"_a);
    m.def("is_self_conjugate_composite", &is_self_conjugate_composite, "m"_a, "n"_a);
    m.def("m_tilde", &m_tilde, "q"_a, "m"_a);
    m.def("field_descent_F", &field_descent_F, "m"_a, "n"_a);
    m.def("semigroup_member", &semigroup_member, "n"_a, "generators"_a);

    m.def("cyclotomic_polynomial", [](u64 k) { return cyclotomic_polynomial(k); }, "m"_a);
    m.def("is_zero", [](u64 order, std::vector<std::int64_t> c) { return is_zero(CycInt(order, std::move(c))); },
          "order"_a, "coeffs"_a);

    py::class_<InvariantBH>(m, "InvariantBH")
        .def(py::init([](std::vector<u64> group, u64 h, std::vector<u64> row) {
                 InvariantBH b{GroupSpec(std::move(group)), h, std::move(row)};
                 b.validate();
                 return b;
             }),
             "group"_a, "h"_a, "row"_a)
        .def_property_readonly("group", [](const InvariantBH& b) { return b.group.moduli(); })
        .def_readonly("h", &InvariantBH::alphabet)
        .def_readonly("row", &InvariantBH::row)
        .def("verify", [](const InvariantBH& b) { return verify_bh(b); })
        .def("autocorrelation", [](const InvariantBH& b, u64 s) { return autocorrelation(b, s).coeffs(); }, "s"_a)
        .def("materialize", [](const InvariantBH& b) { return materialize(b); })
        .def("to_json", [](const InvariantBH& b) { return to_json(b); })
        .def_static("from_json", &bh_from_json, "text"_a)
        .def("__eq__", [](const InvariantBH& a, const InvariantBH& b) { return a == b; })
        .def("__repr__", [](const InvariantBH& b) { return "InvariantBH(" + to_json(b) + ")"; });

    py::class_<PerfectArray>(m, "PerfectArray")
        .def_readonly("dims", &PerfectArray::dims)
        .def_readonly("h", &PerfectArray::alphabet)
        .def_readonly("data", &PerfectArray::data)
        .def("verify", [](const PerfectArray& a) { return verify_array(a); })
        .def("to_json", [](const PerfectArray& a) { return to_json(a); })
        .def_static("from_json", &array_from_json, "text"_a);

    m.def("zadoff_chu", &zadoff_chu, "n"_a);
    m.def("prime_power_bh", &prime_power_bh, "p"_a, "a"_a);
    m.def("kronecker", &kronecker, "a"_a, "b"_a);
    m.def("cyclic_bh", &cyclic_bh, "n"_a, "h"_a);
    m.def("perfect_array", &perfect_array, "dims"_a, "h"_a);

    py::class_<Verdict>(m, "Verdict")
        .def_property_readonly("status", [](const Verdict& v) { return std::string(status_name(v.status)); })
        .def_readonly("rule", &Verdict::rule)
        .def_readonly("note", &Verdict::note)
        .def_property_readonly("certificate", &certificate)
        .def_property_readonly("stage", [](const Verdict& v) { return v.settled() ? stage_of(v.rule) : "-"; })
        .def("__repr__", [](const Verdict& v) {
            return std::string("Verdict(") + status_name(v.status) + (v.rule.empty() ? "" : ", " + v.rule) + ")";
        });

    m.def("classify", &classify, "n"_a, "h"_a);
    m.def("all_verdicts", &all_verdicts, "n"_a, "h"_a);

    m.def(
        "census",
        [](u64 n_min, u64 n_max, u64 h_min, u64 h_max, const std::string& mode, unsigned jobs, bool propagate) {
            CensusOptions o{{n_min, n_max, h_min, h_max}, attribution(mode), jobs, propagate};
            CensusReport r;
            {
                py::gil_scoped_release release;
                r = run_census(o);
            }
            return py::make_tuple(census_json(r, false), census_csv(r));
        },
        "n_min"_a = 1, "n_max"_a = 100, "h_min"_a = 1, "h_max"_a = 100, "attribution"_a = "staged", "jobs"_a = 1,
        "propagate_divisors"_a = false);

    py::register_exception<ConflictError>(m, "ConflictError");
}
