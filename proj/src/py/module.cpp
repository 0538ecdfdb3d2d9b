#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "ualg/corpus.hpp"
#include "ualg/json_io.hpp"
#include "ualg/suite.hpp"

namespace py = pybind11;
using namespace ualg;

namespace {

FiniteAlgebra algebra_from_string(const std::string& text) {
    return algebra_from_json(json::parse(text));
}

Term term_from_string(const std::string& text) {
    return term_from_json(json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_ualg, m) {
    m.doc() = "finite universal-algebra commutator computations";

    py::register_exception<Error>(m, "UalgError");

    py::class_<Congruence>(m, "Congruence")
        .def_static("equality", &Congruence::equality)
        .def_static("full", &Congruence::full)
        .def_static("from_blocks", &Congruence::from_blocks)
        .def("blocks", &Congruence::blocks)
        .def("related", &Congruence::related)
        .def("leq", &Congruence::leq)
        .def("meet", &Congruence::meet)
        .def("__eq__", [](const Congruence& a, const Congruence& b) { return a == b; })
        .def("__repr__",
             [](const Congruence& c) { return "Congruence(" + block_notation(c) + ")"; });

    py::class_<Term>(m, "Term")
        .def_static("from_json", &term_from_string)
        .def("to_json", [](const Term& t) { return term_to_json(t).dump(); })
        .def("__repr__", [](const Term& t) { return t.to_string(); });

    py::class_<FiniteAlgebra>(m, "Algebra")
        .def_static("from_json", &algebra_from_string)
        .def_property_readonly("name", &FiniteAlgebra::name)
        .def_property_readonly("size", &FiniteAlgebra::size)
        .def("to_json", [](const FiniteAlgebra& a) { return algebra_to_json(a).dump(); })
        .def("__repr__", [](const FiniteAlgebra& a) {
            return "Algebra(" + a.name() + ", size=" + std::to_string(a.size()) + ")";
        });

    m.def("con_lattice", &con_lattice, py::arg("algebra"), py::arg("max_size") = 8);
    m.def("cg", &cg);
    m.def("commutator", [](const FiniteAlgebra& a, const Congruence& alpha,
                           const Congruence& beta) {
        return tc_commutator(a, alpha, beta).result;
    });
    m.def("commutator_is_zero", &commutator_is_zero);
    m.def("hypercommutator", &hypercommutator);
    m.def("mstar", [](const FiniteAlgebra& a, const Congruence& alpha,
                      const Congruence& beta) {
        std::vector<std::array<int, 4>> out;
        for (const Matrix2x2& t : mstar(a, alpha, beta).members())
            out.push_back({t.a, t.b, t.c, t.d});
        return out;
    });
    m.def("lipparini", &lipparini);
    m.def(
        "is_difference_term",
        [](const FiniteAlgebra& a, const Term& p) { return is_difference_term(a, p).ok; });
    m.def("is_kiss_term",
          [](const FiniteAlgebra& a, const Term& q) { return is_kiss_term(a, q).ok; });
    m.def("search_difference_term",
          [](const FiniteAlgebra& a, int max_depth) -> std::optional<Term> {
              return search_difference_term(a, max_depth);
          });
    m.def("run_suite", [](const std::string& config_text, const std::string& base_dir) {
        json reports = json::array();
        for (const CheckReport& r : run_suite(json::parse(config_text), base_dir))
            reports.push_back(report_to_json(r));
        return reports.dump();
    });

    auto corpus = m.def_submodule("corpus");
    corpus.def("semilattice2", &corpus::two_element_semilattice);
    corpus.def("lattice2", &corpus::two_element_lattice);
    corpus.def("set2", &corpus::two_element_set);
    corpus.def("cyclic_group", &corpus::cyclic_group);
    corpus.def("s3", &corpus::symmetric_group_s3);
    corpus.def("cyclic_maltsev_term", &corpus::cyclic_maltsev_term);
    corpus.def("s3_maltsev_term", &corpus::s3_maltsev_term);
}
