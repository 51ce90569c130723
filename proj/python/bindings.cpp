#include "deltares/asymptotics.hpp"
#include "deltares/contour.hpp"
#include "deltares/errors.hpp"
#include "deltares/lambert_w.hpp"
#include "deltares/resonance.hpp"
#include "deltares/stirling.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace deltares;

namespace {

py::object to_py_int(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return py::module_::import("builtins").attr("int")(os.str());
}

Window make_window(const std::vector<double>& bounds, const std::vector<int>& grid) {
  if (bounds.size() != 4 || grid.size() != 2) throw DomainError("window needs 4 bounds and grid needs 2 sizes");
  Window w{bounds[0], bounds[1], bounds[2], bounds[3], grid[0], grid[1]};
  w.validate();
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Resonances of the half-line delta barrier via multi-branch Lambert W";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<BranchJumpError>(m, "BranchJumpError", PyExc_ArithmeticError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double h, double alpha, double eps) {
             ModelParams p{h, alpha, eps};
             p.validate();
             return p;
           }),
           py::arg("h"), py::arg("alpha"), py::arg("eps") = 0.3)
      .def_readonly("h", &ModelParams::h)
      .def_readonly("alpha", &ModelParams::alpha)
      .def_readonly("eps", &ModelParams::eps)
      .def("__repr__", [](const ModelParams& p) {
        std::ostringstream os;
        os << "ModelParams(h=" << p.h << ", alpha=" << p.alpha << ", eps=" << p.eps << ")";
        return os.str();
      });

  py::class_<BranchValue>(m, "BranchValue")
      .def_readonly("k", &BranchValue::k)
      .def_readonly("w", &BranchValue::w)
      .def_readonly("remainder", &BranchValue::remainder)
      .def_readonly("tail_bound", &BranchValue::tail_bound)
      .def_readonly("terms_used", &BranchValue::terms_used)
      .def_readonly("winding", &BranchValue::winding);

  py::class_<TailCheck>(m, "TailCheck")
      .def_readonly("lhs", &TailCheck::lhs)
      .def_readonly("rhs", &TailCheck::rhs)
      .def_readonly("tail_bound", &TailCheck::tail_bound)
      .def_readonly("ok", &TailCheck::ok);

  py::class_<Resonance>(m, "Resonance")
      .def_readonly("k", &Resonance::k)
      .def_readonly("z_series", &Resonance::z_series)
      .def_readonly("z_refined", &Resonance::z_refined)
      .def_readonly("residual_series", &Resonance::residual_series)
      .def_readonly("residual_refined", &Resonance::residual_refined)
      .def_readonly("in_annulus", &Resonance::in_annulus)
      .def_readonly("tail_bound", &Resonance::tail_bound);

  m.def("stirling_cycle", [](int p, int q) { return to_py_int(stirling_cycle(p, q)); }, py::arg("p"), py::arg("q"),
        "Unsigned Stirling number of the first kind as a Python int.");
  m.def(
      "series_coefficient",
      [](int j, int mm) {
        const SeriesCoefficient c = series_coefficient(j, mm);
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(to_py_int(boost::multiprecision::numerator(c.value)),
                        to_py_int(boost::multiprecision::denominator(c.value)));
      },
      py::arg("j"), py::arg("m"), "c_{j,m} as a fractions.Fraction.");

  m.def("w_series", [](double L, long k) { return w_series(LogArgument::from_log(L), k); }, py::arg("log_y"),
        py::arg("k"));
  m.def("w_series", [](const ModelParams& p, long k) { return w_series(p.log_argument(), k); }, py::arg("params"),
        py::arg("k"));
  m.def("w_halley", [](double L, long k) { return w_halley(LogArgument::from_log(L), k); }, py::arg("log_y"),
        py::arg("k"));
  m.def("w_halley", [](const ModelParams& p, long k) { return w_halley(p.log_argument(), k); }, py::arg("params"),
        py::arg("k"));
  m.def("remainder_tail_check", [](const ModelParams& p, long k) { return remainder_tail_check(p.log_argument(), k); },
        py::arg("params"), py::arg("k"));

  m.def("residual", &residual, py::arg("params"), py::arg("z"));
  m.def("branch_range", [](const ModelParams& p) {
    const BranchRange r = branch_range(p);
    return py::make_tuple(r.k_min, r.k_max);
  });
  m.def(
      "resonance_from_branch",
      [](const ModelParams& p, long k) { return resonance_from_branch(p, k); }, py::arg("params"), py::arg("k"));
  m.def("newton_refine", [](const ModelParams& p, cplx z0) { return newton_refine(p, z0); }, py::arg("params"),
        py::arg("z0"));
  m.def("scan_resonances", &scan_resonances, py::arg("params"));
  m.def("annulus_resonances", &annulus_resonances, py::arg("params"));

  m.def("width_small_alpha", &width_small_alpha, py::arg("params"), py::arg("re_z"));
  m.def("width_big_alpha", &width_big_alpha, py::arg("params"), py::arg("re_z"));
  m.def("reflection_coefficient", &reflection_coefficient, py::arg("h"), py::arg("alpha"), py::arg("z"));
  m.def(
      "certify_bounds",
      [](const ModelParams& p) {
        const CertifyReport rep = certify_bounds(p, annulus_resonances(p));
        py::list rows;
        for (const auto& r : rep.rows) {
          py::dict d;
          d["k"] = r.k;
          d["z"] = r.z;
          d["curve"] = std::string(to_string(r.curve));
          d["predicted_width"] = r.predicted_width;
          d["deviation"] = r.deviation;
          d["bound"] = r.bound;
          d["pass"] = std::string(to_string(r.verdict));
          rows.append(d);
        }
        py::dict out;
        out["regime"] = std::string(to_string(rep.regime));
        out["violations"] = rep.violations;
        out["rows"] = rows;
        return out;
      },
      py::arg("params"), "Certify all in-annulus resonances against the width theorem for the regime.");

  m.def(
      "contour_scan",
      [](const ModelParams& p, const std::vector<double>& bounds, const std::vector<int>& grid) {
        const Window w = make_window(bounds, grid);
        const ContourSet cs = contour_scan(p, w);
        py::dict out;
        out["real_part_curves"] = cs.real_part_curves;
        out["imag_part_curves"] = cs.imag_part_curves;
        out["intersections"] = cs.intersections;
        out["window_resonances"] = resonances_in_window(p, w);
        return out;
      },
      py::arg("params"), py::arg("window"), py::arg("grid") = std::vector<int>{400, 200});
}
