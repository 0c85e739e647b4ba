#include "lieembed/commands.hpp"
#include "lieembed/errors.hpp"

#include <pybind11/pybind11.h>

#include <filesystem>

namespace py = pybind11;
using namespace lieembed;

namespace {

cmd::Input input(const std::string& ref) { return cmd::load_input(ref); }

SearchOptions search(std::size_t budget, std::uint64_t seed) {
    SearchOptions s;
    s.budget = budget;
    s.seed = seed;
    return s;
}

std::string out(const cmd::json& j) { return io::dump(j); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact structure of real Lie algebras; every function returns a JSON string.";

    auto base = py::register_exception<Error>(m, "LieEmbedError", PyExc_ValueError);
#define LIEEMBED_PY_ERROR(Name) py::register_exception<Name>(m, #Name, base.ptr());
    LIEEMBED_PY_ERROR(ExtensionDegreeTooHigh)
    LIEEMBED_PY_ERROR(ParseError)
    LIEEMBED_PY_ERROR(InvariantViolation)
    LIEEMBED_PY_ERROR(NotASubalgebra)
    LIEEMBED_PY_ERROR(CenterObstruction)
    LIEEMBED_PY_ERROR(NotATorus)
    LIEEMBED_PY_ERROR(UnrecognizedBondPattern)
    LIEEMBED_PY_ERROR(UnrecognizedDiagram)
    LIEEMBED_PY_ERROR(DegenerateRoot)
    LIEEMBED_PY_ERROR(NoRealSemisimpleFound)
    LIEEMBED_PY_ERROR(NoCompactFound)
    LIEEMBED_PY_ERROR(NotAbelianNilpotent)
    LIEEMBED_PY_ERROR(NotNilpotent)
    LIEEMBED_PY_ERROR(NotSplit)
    LIEEMBED_PY_ERROR(VariableMismatch)
    LIEEMBED_PY_ERROR(NotClosed)
#undef LIEEMBED_PY_ERROR

    m.def("analyze", [](const std::string& ref) { return out(cmd::analyze(input(ref))); }, py::arg("input"));
    m.def(
        "embed",
        [](const std::string& ref, const std::string& mode, const std::string& subspace, const std::string& route,
           const std::string& positive_on, std::size_t budget, std::uint64_t seed) {
            cmd::EmbedArgs a{mode, subspace, route, positive_on, search(budget, seed)};
            return out(cmd::embed(input(ref), a));
        },
        py::arg("input"), py::arg("mode"), py::arg("subspace"), py::arg("route") = "split",
        py::arg("positive_on") = "", py::arg("budget") = SearchOptions{}.budget, py::arg("seed") = SearchOptions{}.seed);
    m.def(
        "roots",
        [](const std::string& ref, const std::string& cartan, const std::string& ambient, const std::string& positivity) {
            return out(cmd::roots(input(ref), {cartan, ambient, positivity}));
        },
        py::arg("input"), py::arg("cartan"), py::arg("ambient") = "", py::arg("positivity") = "lex");
    m.def(
        "dynkin",
        [](const std::string& ref, const std::string& cartan, const std::string& ambient, const std::string& positivity) {
            return out(cmd::dynkin(input(ref), {cartan, ambient, positivity}));
        },
        py::arg("input"), py::arg("cartan"), py::arg("ambient") = "", py::arg("positivity") = "lex");
    m.def(
        "vf_brackets", [](const std::string& ref, const std::string& pair) { return out(cmd::vf_brackets(input(ref), pair)); },
        py::arg("input"), py::arg("pair") = "");
    m.def(
        "vf_invariants",
        [](const std::string& ref, const std::string& fields) { return out(cmd::vf_invariants(input(ref), fields)); },
        py::arg("input"), py::arg("fields"));
    m.def(
        "verify",
        [](const std::string& corpus_path, std::size_t budget, std::uint64_t seed) {
            auto j = io::read_json_file(corpus_path);
            auto dir = std::filesystem::path(corpus_path).parent_path().string();
            auto r = cmd::verify(j, dir, search(budget, seed));
            return py::make_tuple(r.ok, out(r.report));
        },
        py::arg("corpus"), py::arg("budget") = SearchOptions{}.budget, py::arg("seed") = SearchOptions{}.seed);
}
