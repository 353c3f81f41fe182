#include "zsspec/chebyshev.hpp"
#include "zsspec/discretize.hpp"
#include "zsspec/eigensolver.hpp"
#include "zsspec/errors.hpp"
#include "zsspec/fcm.hpp"
#include "zsspec/io.hpp"
#include "zsspec/nls.hpp"
#include "zsspec/spectrum.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zs;

namespace {

const char *status_name(PointStatus s) {
  switch (s) {
  case PointStatus::Found:
    return "found";
  case PointStatus::Absent:
    return "absent";
  default:
    return "failed";
  }
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zakharov-Shabat spectra by Chebyshev collocation";

  auto base = py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  (void)base;

  py::class_<ChebyshevBasis>(m, "ChebyshevBasis")
      .def_readonly("n", &ChebyshevBasis::n)
      .def_readonly("nodes", &ChebyshevBasis::nodes)
      .def_readonly("vandermonde", &ChebyshevBasis::vandermonde)
      .def_readonly("transform", &ChebyshevBasis::transform)
      .def_readonly("deriv", &ChebyshevBasis::deriv)
      .def_readonly("node_derivative", &ChebyshevBasis::node_derivative);
  m.def("chebyshev_basis", &make_basis, py::arg("n"));

  py::class_<PotentialSpec>(m, "Potential")
      .def_static("satsuma_yajima", &PotentialSpec::satsuma_yajima, py::arg("amplitude"))
      .def_static("semiclassical", &PotentialSpec::semiclassical, py::arg("epsilon"))
      .def_static("solitonic", &PotentialSpec::solitonic)
      .def_static("custom", &PotentialSpec::custom, py::arg("fn"), py::arg("limit_neg") = cdouble(0.0),
                  py::arg("limit_pos") = cdouble(0.0), py::arg("name") = "custom")
      .def_static(
          "tabulated",
          [](std::vector<double> x, std::vector<cdouble> values, std::optional<cdouble> limit_neg,
             std::optional<cdouble> limit_pos) {
            return PotentialSpec::tabulated(TabulatedPotential(std::move(x), std::move(values)), limit_neg,
                                            limit_pos);
          },
          py::arg("x"), py::arg("values"), py::arg("limit_neg") = cdouble(0.0),
          py::arg("limit_pos") = cdouble(0.0))
      .def_static("from_file",
                  [](const std::string &path, std::optional<cdouble> limit_neg, std::optional<cdouble> limit_pos) {
                    return PotentialSpec::tabulated(read_potential_table(path), limit_neg, limit_pos, path);
                  },
                  py::arg("path"), py::arg("limit_neg") = cdouble(0.0), py::arg("limit_pos") = cdouble(0.0))
      .def("__call__", &PotentialSpec::evaluate, py::arg("x"))
      .def_property_readonly("descriptor", &PotentialSpec::descriptor)
      .def_property_readonly("default_a", &PotentialSpec::default_map_steepness)
      .def("__repr__", [](const PotentialSpec &p) { return "Potential(" + p.descriptor() + ")"; });

  py::class_<ClassifierOptions>(m, "ClassifierOptions")
      .def(py::init([](double tau_im, double delta_match, double merge_radius, bool confirm) {
             return ClassifierOptions{tau_im, delta_match, merge_radius, confirm};
           }),
           py::arg("tau_im") = 1e-2, py::arg("delta_match") = 1e-4, py::arg("merge_radius") = 1e-8,
           py::arg("confirm") = true)
      .def_readwrite("tau_im", &ClassifierOptions::tau_im)
      .def_readwrite("delta_match", &ClassifierOptions::delta_match)
      .def_readwrite("merge_radius", &ClassifierOptions::merge_radius)
      .def_readwrite("confirm", &ClassifierOptions::confirm);

  py::class_<SpectrumResult>(m, "SpectrumResult")
      .def_readonly("all_k", &SpectrumResult::all_k)
      .def_readonly("discrete_k", &SpectrumResult::discrete_k)
      .def_readonly("residuals", &SpectrumResult::residuals)
      .def_property_readonly("method", [](const SpectrumResult &r) { return r.params.method; })
      .def_property_readonly("size", [](const SpectrumResult &r) { return r.params.size; })
      .def_property_readonly("scale", [](const SpectrumResult &r) { return r.params.scale; })
      .def("to_json", [](const SpectrumResult &r) { return spectrum_to_json(r).dump(); });

  py::class_<Eigenfunction>(m, "Eigenfunction")
      .def_readonly("k", &Eigenfunction::k)
      .def_readonly("x", &Eigenfunction::x)
      .def_readonly("psi1", &Eigenfunction::psi1)
      .def_readonly("psi2", &Eigenfunction::psi2)
      .def_readonly("residual", &Eigenfunction::residual);

  py::class_<ConvergenceRecord>(m, "ConvergenceRecord")
      .def_readonly("path", &ConvergenceRecord::path)
      .def_readonly("errors", &ConvergenceRecord::errors)
      .def_readonly("reference_k", &ConvergenceRecord::reference_k)
      .def_property_readonly("status", [](const ConvergenceRecord &r) {
        std::vector<std::string> out;
        for (auto s : r.status)
          out.emplace_back(status_name(s));
        return out;
      });

  py::class_<EvolutionResult>(m, "EvolutionResult")
      .def_readonly("x", &EvolutionResult::x)
      .def_readonly("times", &EvolutionResult::times)
      .def_readonly("field", &EvolutionResult::field)
      .def_readonly("mass_series", &EvolutionResult::mass_series);

  // Potentials may wrap Python callables; long solves drop the GIL and the
  // callable wrapper re-acquires it per call.
  using release = py::call_guard<py::gil_scoped_release>;

  m.def("eigenvalues",
        [](const Eigen::MatrixXcd &a, bool want_vectors) {
          auto d = eigenvalues(a, want_vectors);
          return py::make_tuple(d.eigenvalues, d.eigenvectors);
        },
        py::arg("matrix"), py::arg("want_vectors") = false);

  m.def("operator_matrix",
        [](const PotentialSpec &spec, int n, double a, int lambda_sign) {
          auto basis = std::make_shared<const ChebyshevBasis>(make_basis(n));
          const DomainMap map(a);
          return assemble(basis, map, sample(spec, *basis, map), lambda_sign).matrix;
        },
        py::arg("potential"), py::arg("n"), py::arg("a"), py::arg("lambda_sign") = 1);

  m.def("raw_spectrum", &raw_spectrum, py::arg("potential"), py::arg("n"), py::arg("a"),
        py::arg("lambda_sign") = 1, release());
  m.def("compute_spectrum", &compute_spectrum, py::arg("potential"), py::arg("n"), py::arg("a"),
        py::arg("lambda_sign") = 1, py::arg("options") = ClassifierOptions{}, release());
  m.def("confirmation_size", &confirmation_size, py::arg("n"));
  m.def("eigenfunction", &eigenfunction, py::arg("potential"), py::arg("n"), py::arg("a"), py::arg("lambda_sign"),
        py::arg("k"), py::arg("tolerance") = 1e-4, release());
  m.def("convergence_study", &convergence_study, py::arg("potential"), py::arg("path"), py::arg("reference_k"),
        py::arg("lambda_sign") = 1, py::arg("options") = ClassifierOptions{}, py::arg("threads") = 0u,
        release());
  m.def("default_route", &default_route, py::arg("route"));
  m.def("fcm_spectrum", &fcm_spectrum, py::arg("potential"), py::arg("L"), py::arg("m"),
        py::arg("lambda_sign") = 1, py::arg("options") = fcm_default_classifier(), release());

  m.def("evolve",
        [](const PotentialSpec &initial, double L, int nodes, double t_end, double dt, int stride) {
          EvolutionSetup s{L, nodes, t_end, dt, stride, initial};
          return evolve(s);
        },
        py::arg("initial"), py::arg("L") = 20.0, py::arg("m") = 512, py::arg("t_end") = 6.0,
        py::arg("dt") = 1e-3, py::arg("stride") = 50, release());
  m.def("mass", &mass, py::arg("row"), py::arg("dx"));
  m.def("count_structures", &count_structures, py::arg("row"), py::arg("threshold_fraction") = 0.25,
        py::arg("min_separation") = 8);
}
