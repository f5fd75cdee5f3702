#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sjd/verify.hpp"

namespace py = pybind11;
using namespace sjd;

PYBIND11_MODULE(_sjd, m) {
  m.doc() = "Geometry and dynamics of the Siegel-Jacobi disk";

  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<InvariantError>(m, "InvariantError");
  py::register_exception<UnsupportedRegime>(m, "UnsupportedRegime");
  py::register_exception<SingularityError>(m, "SingularityError");

  py::enum_<Chart>(m, "Chart")
      .value("DISK", Chart::Disk)
      .value("FC", Chart::FC)
      .value("UHP", Chart::UHP);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<double, bool>(), py::arg("k") = 1.0,
           py::arg("strict") = false)
      .def_readonly("k", &ModelParams::k)
      .def("lambda1", &ModelParams::lambda1);

  // Chart transforms operate on plain complex pairs on the Python side.
  m.def("cayley_to_disk", [](complexd v) {
    return cayley_to_disk(UpperHalfPlanePoint{v}).w;
  });
  m.def("cayley_to_uhp",
        [](complexd w) { return cayley_to_uhp(DiskPoint{w}).v; });
  m.def("partial_cayley", [](complexd u, complexd v) {
    const SJDiskPoint p = partial_cayley(SJUHPPoint{u, v});
    return std::make_pair(p.z, p.w.w);
  });
  m.def("partial_cayley_inv", [](complexd z, complexd w) {
    const SJUHPPoint p = partial_cayley_inv(SJDiskPoint{z, w});
    return std::make_pair(p.u, p.v.v);
  });
  m.def("fc_forward", [](complexd eta, complexd w) {
    const SJDiskPoint p = fc_forward(FCPoint{eta, w});
    return std::make_pair(p.z, p.w.w);
  });
  m.def("fc_inverse", [](complexd z, complexd w) {
    const FCPoint p = fc_inverse(SJDiskPoint{z, w});
    return std::make_pair(p.eta, p.w.w);
  });
  m.def("fc1_forward", [](complexd eta, complexd v) {
    const SJUHPPoint p = fc1_forward(eta, UpperHalfPlanePoint{v});
    return std::make_pair(p.u, p.v.v);
  });
  m.def("fc1_inverse",
        [](complexd u, complexd v) { return fc1_inverse(SJUHPPoint{u, v}); });

  py::class_<SU11Element>(m, "SU11Element")
      .def(py::init<complexd, complexd>())
      .def_readonly("a", &SU11Element::a)
      .def_readonly("b", &SU11Element::b)
      .def("inverse", &SU11Element::inverse)
      .def("moebius", &SU11Element::moebius)
      .def(py::self * py::self);

  py::class_<JacobiElement>(m, "JacobiElement")
      .def(py::init<SU11Element, complexd, double>(), py::arg("g"),
           py::arg("alpha"), py::arg("t") = 0.0)
      .def_readonly("g", &JacobiElement::g)
      .def_readonly("alpha", &JacobiElement::alpha)
      .def_readonly("t", &JacobiElement::t)
      .def_static("identity", &JacobiElement::identity);

  m.def("compose", &compose);
  m.def("inverse", py::overload_cast<const JacobiElement&>(&inverse));
  m.def("act_disk", [](const JacobiElement& j, complexd z, complexd w) {
    const SJDiskPoint p = act_disk(j, SJDiskPoint{z, w});
    return std::make_pair(p.z, p.w.w);
  });
  m.def("act_fc", [](const JacobiElement& j, complexd eta, complexd w) {
    const FCPoint p = act_fc(j, FCPoint{eta, w});
    return std::make_pair(p.eta, p.w.w);
  });

  m.def("kahler_potential", [](complexd z, complexd w, const ModelParams& p) {
    return kahler_potential(SJDiskPoint{z, w}, p);
  });
  m.def("log_kernel", [](complexd z1, complexd w1, complexd z2, complexd w2,
                         const ModelParams& p) {
    return log_kernel(SJDiskPoint{z1, w1}, SJDiskPoint{z2, w2}, p);
  });
  m.def("metric_disk", [](complexd z, complexd w, const ModelParams& p) {
    return metric_disk(SJDiskPoint{z, w}, p).h;
  });
  m.def("metric_fc", [](complexd eta, complexd w, const ModelParams& p) {
    return metric_fc(FCPoint{eta, w}, p).h;
  });

  py::class_<HamiltonianCoeffs>(m, "HamiltonianCoeffs")
      .def(py::init<complexd, double, complexd>(), py::arg("eps_a"),
           py::arg("eps_0"), py::arg("eps_plus"))
      .def_readonly("eps_a", &HamiltonianCoeffs::eps_a)
      .def_readonly("eps_0", &HamiltonianCoeffs::eps_0)
      .def_readonly("eps_plus", &HamiltonianCoeffs::eps_plus)
      .def_readonly("eps_minus", &HamiltonianCoeffs::eps_minus);

  m.def("riccati_roots", [](const HamiltonianCoeffs& c) {
    const RiccatiRoots r = riccati_roots(c);
    return py::make_tuple(r.delta, r.w1, r.w2);
  });
  m.def("solve_riccati_disk", &solve_riccati_disk);
  m.def("solve_riccati_uhp", &solve_riccati_uhp);
  m.def("solve_eta_closed", &solve_eta_closed);
  m.def("stays_in_disk", &stays_in_disk);
  m.def("critical_point", &critical_point);
  m.def("energy", [](Chart chart, complexd fiber, complexd base,
                     const HamiltonianCoeffs& c, const ModelParams& p) {
    return energy(chart, {fiber, base}, c, p);
  });
  m.def("geodesic_disk", &geodesic_disk);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("energy", &Trajectory::energy)
      .def_readonly("phi_d_cum", &Trajectory::phi_d_cum)
      .def_readonly("phi_b_cum", &Trajectory::phi_b_cum)
      .def_property_readonly("states",
                             [](const Trajectory& t) {
                               std::vector<std::pair<complexd, complexd>> out;
                               for (const auto& s : t.states)
                                 out.emplace_back(s[0], s[1]);
                               return out;
                             })
      .def_property_readonly("complete", [](const Trajectory& t) {
        return t.status == TrajectoryStatus::Complete;
      });

  m.def(
      "integrate",
      [](Chart chart, complexd fiber, complexd base,
         const HamiltonianCoeffs& c, const std::vector<double>& grid,
         const ModelParams& p) {
        const NonHermitianCoeffs nc = NonHermitianCoeffs::from(c);
        return integrate_numeric(chart, {fiber, base},
                                 [nc](double) { return nc; }, grid,
                                 StepParams{}, p);
      },
      py::arg("chart"), py::arg("fiber"), py::arg("base"), py::arg("coeffs"),
      py::arg("t_grid"), py::arg("params"));

  m.def("berry_phase_fc",
        [](const std::vector<std::pair<complexd, complexd>>& path,
           const ModelParams& p) {
          std::vector<FCPoint> pts;
          pts.reserve(path.size());
          for (const auto& [eta, w] : path) pts.emplace_back(eta, w);
          return berry_phase_fc(pts, p);
        });
  m.def("berry_phase_disk",
        [](const std::vector<std::pair<complexd, complexd>>& path,
           const ModelParams& p) {
          std::vector<SJDiskPoint> pts;
          pts.reserve(path.size());
          for (const auto& [z, w] : path) pts.emplace_back(z, w);
          return berry_phase_disk(pts, p);
        });

  py::class_<InvariantResult>(m, "InvariantResult")
      .def_readonly("name", &InvariantResult::name)
      .def_readonly("samples", &InvariantResult::samples)
      .def_readonly("max_error", &InvariantResult::max_error)
      .def_readonly("tolerance", &InvariantResult::tolerance)
      .def_readonly("passed", &InvariantResult::pass);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("seed", &VerifyReport::seed)
      .def_readonly("results", &VerifyReport::results)
      .def("all_pass", &VerifyReport::all_pass);

  m.def("run_verification", &run_verification, py::arg("seed"),
        py::arg("samples"), py::arg("inject_fc_bug") = false);
}
