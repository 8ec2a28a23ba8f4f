// Python bindings: exact lattice routines plus the document/run pipeline.
// Big integers cross the boundary as Python ints (decimal-string bridged),
// reports as plain dicts mirroring the CLI's JSON output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tfund/corpus.hpp"

#include <sstream>

namespace py = pybind11;
using namespace tfund;

namespace {

Int int_from_py(py::handle h) {
    if (!py::isinstance<py::int_>(h) && !py::isinstance<py::str>(h))
        throw input_error("matrix entries must be ints (or decimal strings)");
    return Int(py::str(h).cast<std::string>());
}

py::object int_to_py(const Int& n) {
    PyObject* obj = PyLong_FromString(to_string(n).c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

IntMatrix matrix_from_py(py::sequence rows, std::size_t cols_hint = 0) {
    std::vector<IntVec> data;
    std::size_t cols = cols_hint;
    for (py::handle row : rows) {
        IntVec v;
        for (py::handle x : py::cast<py::sequence>(row)) v.push_back(int_from_py(x));
        if (data.empty() && cols == 0) cols = v.size();
        data.push_back(std::move(v));
    }
    return IntMatrix(cols, std::move(data));
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (const IntVec& r : m.rows) {
        py::list row;
        for (const Int& x : r) row.append(int_to_py(x));
        rows.append(row);
    }
    return rows;
}

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(py::str(j.dump()));
}

py::dict invariants_to_py(const AbelianInvariants& a) {
    py::dict out;
    py::list torsion;
    for (const Int& d : a.torsion) torsion.append(int_to_py(d));
    out["torsion"] = torsion;
    out["free_rank"] = a.free_rank;
    out["text"] = to_string(a);
    return out;
}

RunFlags flags_from(std::size_t max_cosets, const std::string& faces) {
    if (faces != "rays" && faces != "all")
        throw input_error("faces must be \"rays\" or \"all\"");
    RunFlags f;
    f.max_cosets = max_cosets;
    f.faces = faces == "all" ? FacesMode::AllFaces : FacesMode::Rays;
    return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fundamental groups of torus varieties from polyhedral data";
    m.attr("__version__") = "0.1.0";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);

    m.def(
        "hnf", [](py::sequence rows) { return matrix_to_py(hnf(matrix_from_py(rows))); },
        py::arg("rows"), "Canonical row Hermite normal form of the row lattice.");

    m.def(
        "snf",
        [](py::sequence rows) {
            SmithForm s = snf(matrix_from_py(rows));
            py::dict out;
            py::list diag;
            for (const Int& d : s.diag) diag.append(int_to_py(d));
            out["diag"] = diag;
            out["left"] = matrix_to_py(s.left);
            out["right"] = matrix_to_py(s.right);
            return out;
        },
        py::arg("rows"), "Smith normal form with unimodular transforms.");

    m.def(
        "saturate",
        [](py::sequence rows, std::size_t ambient_rank) {
            return matrix_to_py(saturate(matrix_from_py(rows, ambient_rank), ambient_rank).basis);
        },
        py::arg("rows"), py::arg("ambient_rank"),
        "Canonical basis of the saturation of the row lattice in Z^ambient_rank.");

    m.def(
        "quotient_invariants",
        [](std::size_t ambient_rank, py::sequence rows) {
            return invariants_to_py(
                quotient_invariants(ambient_rank, matrix_from_py(rows, ambient_rank)));
        },
        py::arg("ambient_rank"), py::arg("rows"),
        "Invariant factors of Z^ambient_rank modulo the row lattice.");

    m.def(
        "run",
        [](const std::string& command, const std::string& document, std::size_t max_cosets,
           const std::string& faces) {
            Report r = run(command, parse_document(document), flags_from(max_cosets, faces));
            return json_to_py(render_json(r));
        },
        py::arg("command"), py::arg("document"), py::arg("max_cosets") = 1000000,
        py::arg("faces") = "rays",
        "Execute a command (validate|pi1|local-pi1|toric|cstar|analyze) on a JSON document.");

    m.def(
        "analyze",
        [](const std::vector<std::string>& generators, const std::vector<std::string>& relators,
           std::size_t max_cosets) {
            Presentation p(generators);
            for (const std::string& r : relators) p.add_relator(parse_word(generators, r));
            GroupReport g = analyze(p, max_cosets);
            py::dict out;
            out["order"] = order_description(g);
            out["abelian"] = invariants_to_py(g.abelian);
            out["simplified"] = json_to_py(to_json(g.simplified));
            out["notes"] = g.notes;
            return out;
        },
        py::arg("generators"), py::arg("relators"), py::arg("max_cosets") = 1000000,
        "Certify a finite presentation given as generator names and relator words.");

    m.def(
        "builtin_document",
        [](const std::string& name) { return json_to_py(serialize(builtin_entry(name).document)); },
        py::arg("name"), "The JSON document of a built-in corpus input, as a dict.");

    m.def(
        "corpus",
        [](const std::string& filter) {
            std::ostringstream out;
            int code = run_corpus(filter, out);
            return py::make_tuple(code, out.str());
        },
        py::arg("filter") = "",
        "Recompute the built-in examples; returns (exit_code, report_text).");
}
