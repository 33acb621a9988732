#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsk/dual_orbits.hpp"
#include "gsk/error.hpp"
#include "gsk/groups.hpp"
#include "gsk/transforms.hpp"
#include "gsk/verify.hpp"

namespace py = pybind11;
using gsk::cplx;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

gsk::Signal1D to_signal(const CArray& x, double dt, double t0) {
  if (x.ndim() != 1) throw gsk::Error(gsk::ErrorCode::DimensionMismatch, "signal must be 1-d");
  gsk::Signal1D s;
  s.samples.assign(x.data(), x.data() + x.size());
  s.dt = dt;
  s.t0 = t0;
  return s;
}

template <class T>
py::array_t<T> vec(const std::vector<T>& v) {
  py::array_t<T> a(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())});
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

gsk::GroupDescriptor find_group(const std::string& tag, double mass, double p) {
  for (const auto& d : gsk::GroupDescriptor::bundled(mass, p))
    if (d.tag() == tag || d.tag().substr(0, d.tag().find('(')) == tag) return d;
  throw gsk::Error(gsk::ErrorCode::Domain, "unknown group '" + tag + "'");
}

}  // namespace

PYBIND11_MODULE(_gsk, m) {
  m.doc() = "group-theoretic signal kit (C++ core)";

  py::register_exception<gsk::Error>(m, "Error", PyExc_ValueError);

  // groups
  m.def("group_tags", [](double mass, double p) {
    std::vector<std::string> out;
    for (const auto& d : gsk::GroupDescriptor::bundled(mass, p)) out.push_back(d.tag());
    return out;
  }, py::arg("mass") = 1.0, py::arg("p") = 0.5);
  m.def("compose", [](const std::string& tag, const gsk::Params& g1, const gsk::Params& g2, double mass, double p) {
    auto d = find_group(tag, mass, p);
    return gsk::compose(gsk::GroupElement(d, g1), gsk::GroupElement(d, g2)).params();
  }, py::arg("group"), py::arg("g1"), py::arg("g2"), py::arg("mass") = 1.0, py::arg("p") = 0.5);
  m.def("to_matrix", [](const std::string& tag, const gsk::Params& g, double mass, double p) {
    return gsk::to_matrix(gsk::GroupElement(find_group(tag, mass, p), g));
  }, py::arg("group"), py::arg("g"), py::arg("mass") = 1.0, py::arg("p") = 0.5);

  // dual orbits
  m.def("dual_act", [](const std::string& group, const std::vector<double>& h, const std::vector<double>& x, double mass) {
    auto g = gsk::parse_dual_group(group);
    return gsk::dual_act({g, h}, {g, x, mass}).coords;
  }, py::arg("group"), py::arg("h"), py::arg("point"), py::arg("mass") = 1.0);
  m.def("orbit_label", [](const std::string& group, const std::vector<double>& x, double mass) {
    return gsk::orbit_id({gsk::parse_dual_group(group), x, mass}).str();
  }, py::arg("group"), py::arg("point"), py::arg("mass") = 1.0);
  m.def("orbit_coords", [](const std::string& group, const std::vector<double>& x, double mass) {
    return gsk::to_orbit_coords({gsk::parse_dual_group(group), x, mass});
  }, py::arg("group"), py::arg("point"), py::arg("mass") = 1.0);

  // transforms
  py::class_<gsk::WindowSpec>(m, "Window")
      .def_static("morlet", &gsk::WindowSpec::morlet, py::arg("omega0") = 6.0)
      .def_static("gaussian", &gsk::WindowSpec::gaussian, py::arg("width"), py::arg("center") = 0.0)
      .def_static("mexican_hat", &gsk::WindowSpec::mexican_hat)
      .def("__call__", &gsk::WindowSpec::time_value)
      .def("fourier", &gsk::WindowSpec::fourier);
  m.def("admissibility_constant", [](const gsk::WindowSpec& w) { return gsk::admissibility_constant(w); });

  py::class_<gsk::CoefficientGrid>(m, "CoefficientGrid")
      .def_property_readonly("kind", [](const gsk::CoefficientGrid& g) { return gsk::to_string(g.kind); })
      .def_readonly("axis1_name", &gsk::CoefficientGrid::axis1_name)
      .def_readonly("axis2_name", &gsk::CoefficientGrid::axis2_name)
      .def_property_readonly("axis1", [](const gsk::CoefficientGrid& g) { return vec(g.axis1); })
      .def_property_readonly("axis2", [](const gsk::CoefficientGrid& g) { return vec(g.axis2); })
      .def_property_readonly("values", [](const gsk::CoefficientGrid& g) {
        py::array_t<cplx> a({static_cast<py::ssize_t>(g.rows()), static_cast<py::ssize_t>(g.cols())});
        std::copy(g.values.begin(), g.values.end(), a.mutable_data());
        return a;
      });

  m.def("log_uniform", &gsk::log_uniform);
  m.def("cwt", [](const CArray& x, double dt, const std::vector<double>& scales, const gsk::WindowSpec& w, double t0) {
    return gsk::cwt(to_signal(x, dt, t0), w, scales);
  }, py::arg("x"), py::arg("dt"), py::arg("scales"), py::arg("window") = gsk::WindowSpec::morlet(), py::arg("t0") = 0.0);
  m.def("icwt", [](const gsk::CoefficientGrid& W, const gsk::WindowSpec& w) {
    return vec(gsk::icwt(W, w).samples);
  }, py::arg("coefficients"), py::arg("window") = gsk::WindowSpec::morlet());
  m.def("stft", [](const CArray& x, double dt, const gsk::WindowSpec& w, std::size_t hop, double t0) {
    return gsk::stft(to_signal(x, dt, t0), w, hop);
  }, py::arg("x"), py::arg("dt"), py::arg("window"), py::arg("hop") = 1, py::arg("t0") = 0.0);
  m.def("stockwell", [](const CArray& x, double dt, std::size_t n_freq, double t0) {
    return gsk::stockwell(to_signal(x, dt, t0), n_freq);
  }, py::arg("x"), py::arg("dt"), py::arg("n_freq"), py::arg("t0") = 0.0);
  m.def("stockwell_time_marginal", &gsk::stockwell_time_marginal);

  // verify
  m.def("suite_names", &gsk::suite_names);
  m.def("verify_json", [](const std::string& suite, std::uint64_t seed, std::size_t samples) {
    return gsk::report_json(gsk::run_verify({suite, seed, samples}));
  }, py::arg("suite") = "all", py::arg("seed") = 1, py::arg("samples") = 1000);
}
