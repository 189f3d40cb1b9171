#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhopf/examples.hpp"
#include "qhopf/io.hpp"
#include "qhopf/report.hpp"

namespace py = pybind11;
using namespace qhopf;

namespace {

using Coeffs = std::vector<std::string>;

Coeffs strings(const Vector& v) {
  Coeffs out;
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::vector<Coeffs> strings(const Matrix& m) {
  std::vector<Coeffs> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(strings(m.row(i)));
  return out;
}

FieldSpec field_of(const std::string& tag) { return FieldSpec::parse(tag); }

Element element(const QuasiHopfPresentation& p, const Coeffs& c) {
  if (c.size() != p.dim()) throw py::value_error("expected " + std::to_string(p.dim()) + " coefficients");
  Vector v;
  for (const auto& s : c) v.push_back(p.field().parse_scalar(s));
  return Element(v);
}

QuasiHopfAlgebra algebra(const QuasiHopfPresentation& p) { return QuasiHopfAlgebra(p); }

py::dict laws(const VerificationReport& rep) {
  py::dict d;
  for (const auto& l : rep.laws()) d[py::str(l.law)] = l.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification of quasi-Hopf algebra presentations";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<QuasiHopfPresentation>(m, "Presentation")
      .def_property_readonly("dimension", &QuasiHopfPresentation::dim)
      .def_property_readonly("field", [](const QuasiHopfPresentation& p) { return p.field().tag(); })
      .def_property_readonly("labels", [](const QuasiHopfPresentation& p) { return p.qb.algebra.labels; })
      .def_readwrite("name", &QuasiHopfPresentation::name)
      .def_readwrite("provenance", &QuasiHopfPresentation::provenance)
      .def_property_readonly("alpha", [](const QuasiHopfPresentation& p) { return strings(p.alpha.coeffs()); })
      .def_property_readonly("beta", [](const QuasiHopfPresentation& p) { return strings(p.beta.coeffs()); })
      .def_property_readonly("antipode", [](const QuasiHopfPresentation& p) { return strings(p.antipode); })
      .def("to_json", &serialize_presentation)
      .def("__repr__", [](const QuasiHopfPresentation& p) {
        return "<Presentation '" + p.name + "' dim=" + std::to_string(p.dim()) + " over " + p.field().tag() + ">";
      });

  m.def(
      "parse",
      [](const std::string& text, std::optional<std::string> field) {
        std::optional<FieldSpec> f;
        if (field) f = field_of(*field);
        return parse_presentation_file(text, "<string>", f).presentation;
      },
      py::arg("text"), py::arg("field") = py::none());
  m.def(
      "load",
      [](const std::string& path, std::optional<std::string> field) {
        std::optional<FieldSpec> f;
        if (field) f = field_of(*field);
        return load_presentation_file(path, f).presentation;
      },
      py::arg("path"), py::arg("field") = py::none());

  m.def("group_algebra_cyclic", [](std::size_t n, const std::string& f) {
    return build_group_algebra(cyclic_group(n), field_of(f));
  }, py::arg("n"), py::arg("field") = "Q");
  m.def("group_algebra_symmetric", [](std::size_t k, const std::string& f) {
    return build_group_algebra(symmetric_group(k), field_of(f));
  }, py::arg("k"), py::arg("field") = "Q");
  m.def("sweedler", [](const std::string& f) { return example_sweedler(field_of(f)); }, py::arg("field") = "Q");
  m.def("dual_z2_twisted", [](const std::string& f) { return example_dual_z2_twisted(field_of(f)); },
        py::arg("field") = "Q");
  m.def("standard_examples", &standard_examples);
  m.def("twisted_variants", &twisted_variants);
  m.def(
      "gauge_twist",
      [](const QuasiHopfPresentation& p, const std::vector<Coeffs>& F) {
        const std::size_t n = p.dim();
        if (F.size() != n) throw py::value_error("F must be an n x n coefficient table");
        Tensor t(n, 2);
        for (std::size_t i = 0; i < n; ++i) {
          const Element row = element(p, F[i]);
          for (std::size_t j = 0; j < n; ++j) t.at({i, j}) = row[j];
        }
        return gauge_twist(p, t);
      },
      py::arg("presentation"), py::arg("F"));

  m.def("verify", [](const QuasiHopfPresentation& p) { return laws(verify_all(algebra(p))); });
  m.def("left_integral", [](const QuasiHopfPresentation& p) { return strings(integral_data(algebra(p)).t.coeffs()); });
  m.def("right_integral", [](const QuasiHopfPresentation& p) { return strings(integral_data(algebra(p)).r.coeffs()); });
  m.def("modular_augmentation",
        [](const QuasiHopfPresentation& p) { return strings(integral_data(algebra(p)).mu.coeffs()); });
  m.def("frobenius_functional",
        [](const QuasiHopfPresentation& p) { return strings(integral_data(algebra(p)).lambda.coeffs()); });
  m.def("nakayama", [](const QuasiHopfPresentation& p) { return strings(integral_data(algebra(p)).fs.eta); });
  m.def("comodulus", [](const QuasiHopfPresentation& p) {
    const auto h = algebra(p);
    return strings(comodulus(h, integral_data(h).fs).u.coeffs());
  });
  m.def("normalized_integral", [](const QuasiHopfPresentation& p) -> std::optional<Coeffs> {
    const auto h = algebra(p);
    auto t = normalized_integral(h, Side::Left);
    if (!t) t = normalized_integral(h, Side::Right);
    if (!t) return std::nullopt;
    return strings(t->coeffs());
  });
  m.def("is_unimodular", [](const QuasiHopfPresentation& p) { return is_unimodular(algebra(p)); });
  m.def("is_separable", [](const QuasiHopfPresentation& p) { return counit_splitting(algebra(p)).has_value(); });
  m.def("multiply", [](const QuasiHopfPresentation& p, const Coeffs& a, const Coeffs& b) {
    return strings(Algebra(p.qb.algebra).mul(element(p, a), element(p, b)).coeffs());
  });

  m.def("commands", &command_names);
  m.def(
      "run",
      [](const std::string& command, const QuasiHopfPresentation& p, std::optional<std::string> sub_json) {
        const auto c = parse_command(command);
        if (!c) throw py::value_error("unknown command " + command);
        std::optional<SubalgebraPair> pair;
        if (sub_json) {
          PresentationFile h;
          h.presentation = p;
          pair = pair_from_files(h, parse_presentation_file(*sub_json, "<sub>", p.field()));
        }
        py::gil_scoped_release release;
        const auto r = run_command(*c, p, pair);
        py::gil_scoped_acquire acquire;
        return py::make_tuple(r.ok, r.doc.dump(), r.text);
      },
      py::arg("command"), py::arg("presentation"), py::arg("sub") = py::none());
}
