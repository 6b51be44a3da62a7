#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mslopes/report.hpp"

namespace py = pybind11;
using namespace mslopes;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

std::vector<std::vector<std::string>> basic_edgepaths(const std::string& tangle) {
  std::vector<std::vector<std::string>> out;
  for (const Edgepath& p : enumerate_basic_edgepaths(Fraction::parse(tangle))) {
    std::vector<std::string> vs;
    for (Fraction f : p.angle_vertices()) vs.push_back(f.str());
    out.push_back(std::move(vs));
  }
  return out;
}

std::pair<std::string, std::string> bounds(const Interval& i) { return {i.lo.str(), i.hi.str()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boundary slope diameters of Montesinos knots";

  py::register_exception<std::overflow_error>(m, "FractionOverflow", PyExc_OverflowError);

  m.def("parse_knot", [](const std::string& s) {
    std::vector<std::string> out;
    for (Fraction t : KnotSpec::parse(s).tangles) out.push_back(t.str());
    return out;
  }, py::arg("text"), "Reduced tangle list of a knot given as M(p1/q1,...).");

  m.def("component_count", [](const std::string& s) { return component_count(KnotSpec::parse(s)); },
        py::arg("knot"));

  m.def("basic_edgepaths", &basic_edgepaths, py::arg("tangle"),
        "Vertex lists of the minimal basic edgepaths of a tangle.");

  m.def("report_json", [](const std::string& s, bool candidates) {
    KnotReport r;
    {
      py::gil_scoped_release release;
      AnalysisOptions o;
      o.keep_candidates = candidates;
      r = analyse(KnotSpec::parse(s), o);
    }
    return to_json(r, candidates).dump();
  }, py::arg("knot"), py::arg("candidates") = false, "Full report as a JSON string.");

  m.def("twist_extremes", [](const std::string& s) {
    KnotReport r = analyse(KnotSpec::parse(s), {{}, false, std::nullopt});
    return std::make_pair(bounds(r.tau_max), bounds(r.tau_min));
  }, py::arg("knot"), "((tau_max lo, hi), (tau_min lo, hi)) as strings.");

  m.def("diameter", [](const std::string& s) {
    return bounds(analyse(KnotSpec::parse(s), {{}, false, std::nullopt}).diameter);
  }, py::arg("knot"));

  m.def("crossing_number", [](const std::string& s) {
    return crossing_number(KnotCatalog(KnotSpec::parse(s))).str();
  }, py::arg("knot"));

  m.def("case_tag", [](const std::string& s) { return std::string(to_string(classify_case(KnotSpec::parse(s)).tag)); },
        py::arg("knot"));

  m.def("partial_edge_length", [](const std::string& near, const std::string& far, const std::string& u0) {
    return partial_edge_length(Fraction::parse(near), Fraction::parse(far), Fraction::parse(u0)).str();
  }, py::arg("near"), py::arg("far"), py::arg("u0"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
