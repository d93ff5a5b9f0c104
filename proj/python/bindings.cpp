#include "qwb/cellular.hpp"
#include "qwb/combinat.hpp"
#include "qwb/relations.hpp"
#include "qwb/repthy.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qwb;

namespace {

using PyPartition = std::vector<int>;
using PyLabel = std::pair<int, std::pair<PyPartition, PyPartition>>;

CellLabel to_label(const PyLabel& l) {
  return {l.first, Bipartition{Partition(l.second.first), Partition(l.second.second)}};
}

PyLabel from_label(const CellLabel& l) { return {l.f, {l.lambda.first.parts(), l.lambda.second.parts()}}; }

std::vector<PyLabel> from_labels(const std::vector<CellLabel>& ls) {
  std::vector<PyLabel> out;
  for (const auto& l : ls) out.push_back(from_label(l));
  return out;
}

py::object to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default:
      throw std::runtime_error("unsupported JSON value");
  }
}

// Python-side holders for the const shared pointers used by the library.
struct PyField {
  FieldPtr f;
};
struct PyEngine {
  EnginePtr e;
};

FieldPtr field_arg(const py::object& f) {
  if (f.is_none()) return Field::generic();
  if (py::isinstance<py::str>(f)) return Field::parse(f.cast<std::string>());
  return f.cast<const PyField&>().f;
}

struct PyCellular {
  CellularPtr cb;

  CellModule module(const PyLabel& l) const { return CellModule(cb, to_label(l)); }
};

SemisimpleMode parse_mode(const std::string& m) {
  if (m == "closed") return SemisimpleMode::ClosedForm;
  if (m == "gram") return SemisimpleMode::Gram;
  if (m == "both") return SemisimpleMode::Both;
  throw std::invalid_argument("mode must be closed, gram or both");
}

ArcKind parse_kind(const std::string& k) {
  if (k == "row") return ArcKind::Row;
  if (k == "column") return ArcKind::Column;
  throw std::invalid_argument("kind must be row or column");
}

Idempotent parse_idempotent(const std::string& c) {
  if (c == "e_tilde") return Idempotent::ETilde;
  if (c == "f21") return Idempotent::F21;
  throw std::invalid_argument("idempotent must be e_tilde or f21");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantized walled Brauer algebras over exact fields";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FieldError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<PyField>(m, "Field")
      .def_static("parse", [](const std::string& spec) { return PyField{Field::parse(spec)}; }, py::arg("spec"))
      .def_static("generic", [] { return PyField{Field::generic()}; })
      .def_static(
          "one_variable", [](int a, int sign) { return PyField{Field::one_variable(a, sign)}; }, py::arg("exponent"),
          py::arg("sign") = 1, "Q(q) with rho = sign * q^exponent.")
      .def_property_readonly("spec", [](const PyField& f) { return f.f->spec(); })
      .def_property_readonly("quantum_characteristic", [](const PyField& f) { return quantum_characteristic(*f.f).value; })
      .def("__repr__", [](const PyField& f) { return "Field('" + f.f->spec() + "')"; });

  py::class_<PyEngine>(m, "Engine")
      .def(py::init([](int r, int s, const py::object& field, int max_size) {
             return PyEngine{AlgebraEngine::build(r, s, field_arg(field), EngineOptions{max_size})};
           }),
           py::arg("r"), py::arg("s"), py::arg("field") = py::none(), py::arg("max_size") = 0)
      .def_property_readonly("r", [](const PyEngine& e) { return e.e->r(); })
      .def_property_readonly("s", [](const PyEngine& e) { return e.e->s(); })
      .def_property_readonly("dim", [](const PyEngine& e) { return e.e->dim(); })
      .def_property_readonly("field", [](const PyEngine& e) { return PyField{e.e->field()}; })
      .def("verify_relations", [](const PyEngine& e) { return to_py(to_json(verify_relations(*e.e))); })
      .def("left_ideal_dim", [](const PyEngine& e) { return left_ideal_dim(*e.e); }, "Dimension of B_{r,s} e_1.")
      .def("to_json", [](const PyEngine& e) { return e.e->to_json().dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return PyEngine{AlgebraEngine::from_json(nlohmann::json::parse(text))}; });

  py::class_<PyCellular>(m, "CellularBasis")
      .def(py::init([](const PyEngine& eng) { return PyCellular{CellularBasis::build(eng.e)}; }), py::arg("engine"))
      .def_property_readonly("engine", [](const PyCellular& c) { return PyEngine{c.cb->engine()}; })
      .def_property_readonly("dim", [](const PyCellular& c) { return c.cb->dim(); })
      .def("labels",
           [](const PyCellular& c) {
             std::vector<PyLabel> out;
             for (const auto& blk : c.cb->blocks()) out.push_back(from_label(blk.label));
             return out;
           })
      .def("cell_dim", [](const PyCellular& c, const PyLabel& l) { return c.module(l).dim(); }, py::arg("label"))
      .def(
          "gram",
          [](const PyCellular& c, const PyLabel& l) {
            const Matrix g = c.module(l).gram();
            std::vector<std::vector<std::string>> out(g.rows());
            for (int i = 0; i < g.rows(); ++i)
              for (int j = 0; j < g.cols(); ++j) out[i].push_back(g.element(i, j).to_string());
            return out;
          },
          py::arg("label"))
      .def(
          "gram_determinant", [](const PyCellular& c, const PyLabel& l) { return c.module(l).gram().determinant().to_string(); },
          py::arg("label"))
      .def("gram_rank", [](const PyCellular& c, const PyLabel& l) { return c.module(l).gram().rank(); }, py::arg("label"))
      .def("validate", [](const PyCellular& c) { return to_py(to_json(validate_cell_datum(*c.cb))); })
      .def("central_characters",
           [](const PyCellular& c) {
             py::list out;
             for (const auto& cc : central_character_table(c.cb)) out.append(to_py(to_json(cc)));
             return out;
           })
      .def("simples_by_gram", [](const PyCellular& c) { return from_labels(simples_by_gram(c.cb)); })
      .def(
          "branching_check", [](const PyCellular& c, const PyLabel& l) { return to_py(to_json(branching_check(c.cb, to_label(l)))); },
          py::arg("label"))
      .def(
          "schur_truncation_check",
          [](const PyCellular& c, const PyLabel& l, const std::string& choice) {
            return to_py(to_json(schur_truncation_check(c.cb, to_label(l), parse_idempotent(choice))));
          },
          py::arg("label"), py::arg("idempotent"))
      .def(
          "submodule_witness",
          [](const PyCellular& c, const std::string& kind) { return to_py(to_json(submodule_witness(c.cb, parse_kind(kind)))); },
          py::arg("kind"));

  m.def("cell_labels", [](int r, int s) { return from_labels(cell_labels(r, s)); }, py::arg("r"), py::arg("s"));
  m.def("cell_dim", [](int r, int s, const PyLabel& l) { return cell_dim(r, s, to_label(l)); }, py::arg("r"), py::arg("s"),
        py::arg("label"));
  m.def(
      "central_scalar", [](const PyLabel& l, const py::object& f) { return central_scalar(to_label(l), field_arg(f)).to_string(); },
      py::arg("label"), py::arg("field") = py::none());
  m.def(
      "classify_simples", [](int r, int s, const py::object& f) { return from_labels(classify_simples(r, s, field_arg(f))); },
      py::arg("r"), py::arg("s"), py::arg("field") = py::none());
  m.def(
      "semisimplicity",
      [](int r, int s, const py::object& f, const std::string& mode) {
        return to_py(to_json(semisimplicity(r, s, field_arg(f), parse_mode(mode))));
      },
      py::arg("r"), py::arg("s"), py::arg("field") = py::none(), py::arg("mode") = "closed");
  m.def(
      "onearc_zero_locus", [](int r, const std::string& kind) { return to_py(to_json(onearc_zero_locus(r, parse_kind(kind)))); },
      py::arg("r"), py::arg("kind"));
  m.def("delta_zero_gram_checks", [] {
    py::list out;
    for (const auto& g : delta_zero_gram_checks()) out.append(to_py(to_json(g)));
    return out;
  });
  m.def(
      "branching_check",
      [](int r, int s, const PyLabel& l, const py::object& f) {
        auto cb = CellularBasis::build(AlgebraEngine::build(r, s, field_arg(f)));
        return to_py(to_json(branching_check(cb, to_label(l))));
      },
      py::arg("r"), py::arg("s"), py::arg("label"), py::arg("field") = py::none());
  m.def(
      "schur_truncation_check",
      [](int r, int s, const PyLabel& l, const std::string& choice, const py::object& f) {
        auto cb = CellularBasis::build(AlgebraEngine::build(r, s, field_arg(f)));
        return to_py(to_json(schur_truncation_check(cb, to_label(l), parse_idempotent(choice))));
      },
      py::arg("r"), py::arg("s"), py::arg("label"), py::arg("idempotent"), py::arg("field") = py::none());
  m.def(
      "submodule_witness",
      [](int r, int s, const std::string& kind, const py::object& f) {
        auto cb = CellularBasis::build(AlgebraEngine::build(r, s, field_arg(f)));
        return to_py(to_json(submodule_witness(cb, parse_kind(kind))));
      },
      py::arg("r"), py::arg("s"), py::arg("kind"), py::arg("field") = py::none());
}
