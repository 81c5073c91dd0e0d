#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sympq/cli.hpp"
#include "sympq/gamma_ring.hpp"
#include "sympq/laurent_models.hpp"
#include "sympq/pieri_paths.hpp"
#include "sympq/tableaux.hpp"

namespace py = pybind11;
using namespace sympq;

namespace {

using Coeffs = std::vector<std::tuple<std::vector<int>, std::string, std::string>>;

Coeffs flatten(const BasisExpansion& x) {
    Coeffs out;
    for (auto it = x.coeffs.rbegin(); it != x.coeffs.rend(); ++it)
        out.emplace_back(it->first.parts(), it->second.num_str(), it->second.den_str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact symplectic P- and Q-functions";

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
        }
        return std::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line interface; returns (exit code, stdout, stderr).");

    m.def("structure_constants", [](const std::vector<int>& mu, const std::vector<int>& nu) {
        return flatten(structure_constants(StrictPartition(mu), StrictPartition(nu)));
    }, py::arg("mu"), py::arg("nu"));

    m.def("to_basis", [](const std::vector<int>& lam, const std::string& from, const std::string& to) {
        return flatten(to_basis(basis_element(parse_basis(from), StrictPartition(lam)), parse_basis(to)));
    }, py::arg("lam"), py::arg("source"), py::arg("target"));

    m.def("pieri_coefficient", [](const std::vector<int>& lam, const std::vector<int>& mu, int r) {
        return pieri_closed(StrictPartition(lam), StrictPartition(mu), r);
    }, py::arg("lam"), py::arg("mu"), py::arg("r"));

    m.def("usymp_Q", [](const std::vector<int>& lam) { return usymp_Q(StrictPartition(lam)).to_string(); });
    m.def("usymp_P", [](const std::vector<int>& lam) { return usymp_P(StrictPartition(lam)).to_string(); });

    m.def("laurent_Q", [](const std::vector<int>& lam, int n) {
        return specialize(usymp_Q(StrictPartition(lam)), SpecializationContext(n)).to_string();
    }, py::arg("lam"), py::arg("n"));

    m.def("tableau_count", [](const std::vector<int>& outer, const std::vector<int>& inner, int n) {
        return tableau_count(SkewShiftedShape(StrictPartition(outer), StrictPartition(inner)), n, true);
    }, py::arg("outer"), py::arg("inner"), py::arg("n"));

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
