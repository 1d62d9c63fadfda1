// Python module exposing the main operations: parameters and grids, the
// hyperbolic-structure algebra, the heave dynamics, the fluid stepper and the
// coupled/prescribed/fixed-point drivers with their diagnostics.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "floatswe/config.hpp"
#include "floatswe/coupling.hpp"
#include "floatswe/diagnostics.hpp"
#include "floatswe/fluid.hpp"
#include "floatswe/hyperbolic.hpp"
#include "floatswe/io.hpp"
#include "floatswe/run.hpp"
#include "floatswe/solid.hpp"

namespace py = pybind11;
using namespace floatswe;

namespace {

py::dict trajectory_to_dict(const Trajectory& traj) {
  std::vector<double> t, delta, w, zeta_R, q_wall, E_sw, E_sol, E_tot, P_cor,
      mass, margin;
  for (const auto& r : traj.records) {
    t.push_back(r.t);
    delta.push_back(r.delta);
    w.push_back(r.w);
    zeta_R.push_back(r.zeta_R);
    q_wall.push_back(r.q_wall);
    E_sw.push_back(r.E_sw);
    E_sol.push_back(r.E_sol);
    E_tot.push_back(r.E_tot);
    P_cor.push_back(r.P_cor);
    mass.push_back(r.mass_total);
    margin.push_back(r.subsonic_margin_min);
  }
  py::dict d;
  d["t"] = t;
  d["delta"] = delta;
  d["w"] = w;
  d["zeta_R"] = zeta_R;
  d["q_wall"] = q_wall;
  d["E_sw"] = E_sw;
  d["E_sol"] = E_sol;
  d["E_tot"] = E_tot;
  d["P_cor"] = P_cor;
  d["mass_total"] = mass;
  d["subsonic_margin_min"] = margin;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Radial shallow-water flow coupled to a heaving floating cylinder";

  static py::exception<Error> base_exc(m, "FloatsweError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      base_exc(
          (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def_readonly("g", &PhysicalParams::g)
      .def_readonly("rho", &PhysicalParams::rho)
      .def_readonly("h0", &PhysicalParams::h0)
      .def_readonly("R", &PhysicalParams::R)
      .def_readonly("m", &PhysicalParams::m)
      .def_readonly("P_atm", &PhysicalParams::P_atm)
      .def_readonly("c_stiff", &PhysicalParams::c_stiff)
      .def_readonly("b_scale", &PhysicalParams::b_scale);

  m.def("make_params", &make_params, py::arg("g"), py::arg("rho"),
        py::arg("h0"), py::arg("R"), py::arg("m"), py::arg("P_atm") = 0.0);

  py::class_<SolidShape>(m, "SolidShape")
      .def_static("flat", &SolidShape::flat, py::arg("h_w_eq"))
      .def_static("profiled", &SolidShape::profiled, py::arg("h_w_eq"),
                  py::arg("dr_h_w_eq"))
      .def("h_w_eq", &SolidShape::h_w_eq)
      .def("h_w", &SolidShape::h_w)
      .def_property_readonly("is_flat", &SolidShape::is_flat);

  py::class_<RadialGrid>(m, "RadialGrid")
      .def_readonly("R", &RadialGrid::R)
      .def_readonly("r_max", &RadialGrid::r_max)
      .def_readonly("N", &RadialGrid::N)
      .def_readonly("dr", &RadialGrid::dr)
      .def_readonly("face", &RadialGrid::face)
      .def_readonly("center", &RadialGrid::center);

  m.def("make_grid", &make_grid, py::arg("R"), py::arg("r_max"), py::arg("N"));

  py::class_<StatePoint>(m, "StatePoint")
      .def_static("from_elevation", &StatePoint::from_elevation,
                  py::arg("zeta"), py::arg("q"), py::arg("h0"))
      .def_static("from_depth", &StatePoint::from_depth, py::arg("h"),
                  py::arg("q"), py::arg("h0") = 0.0)
      .def_readonly("zeta", &StatePoint::zeta)
      .def_readonly("q", &StatePoint::q)
      .def_readonly("h", &StatePoint::h);

  m.def("flux_jacobian", [](const StatePoint& p, double g) {
    const Mat2 A = flux_jacobian(p, g);
    return std::vector<std::vector<double>>{{A.a, A.b}, {A.c, A.d}};
  });
  m.def("source_matrix", [](const StatePoint& p, double r) {
    const Mat2 B = source_matrix(p, r);
    return std::vector<std::vector<double>>{{B.a, B.b}, {B.c, B.d}};
  });
  m.def("subsonic_margin", &subsonic_margin, py::arg("p"), py::arg("g"));
  m.def("eigenvalues", [](const StatePoint& p, double g) {
    const EigenData ed = eigen(p, g);
    return std::make_pair(ed.lambda_minus, ed.lambda_plus);
  });
  m.def("dissipativity_threshold", &dissipativity_threshold, py::arg("p"),
        py::arg("g"));
  m.def("symmetrizer", [](const StatePoint& p, double g, double M) {
    const Symmetrizer s =
        M > 0.0 ? build_symmetrizer(p, g, M) : build_symmetrizer(p, g);
    py::dict d;
    d["M"] = s.M;
    d["S"] = std::vector<std::vector<double>>{{s.S.a, s.S.b}, {s.S.c, s.S.d}};
    d["alpha"] = s.alpha;
    d["sa_e1_e1"] = s.sa_e1_e1;
    d["maximally_dissipative"] = s.maximally_dissipative;
    return d;
  }, py::arg("p"), py::arg("g"), py::arg("M") = 0.0);

  m.def("added_mass", &added_mass);
  m.def("beta_coeff", &beta_coeff);
  m.def("interior_discharge", &interior_discharge);
  m.def("pressure_cor", &pressure_cor);

  py::class_<SolidState>(m, "SolidState")
      .def(py::init([](double delta, double w) {
             return SolidState{delta, w};
           }),
           py::arg("delta") = 0.0, py::arg("w") = 0.0)
      .def_readwrite("delta", &SolidState::delta)
      .def_readwrite("w", &SolidState::w);

  m.def("solid_rhs", &solid_rhs, py::arg("s"), py::arg("zeta_e_R"),
        py::arg("params"), py::arg("shape"),
        py::arg("with_pressure_corrector") = true);

  py::class_<FluidForceBreakdown>(m, "FluidForceBreakdown")
      .def_readonly("F_I", &FluidForceBreakdown::F_I)
      .def_readonly("F_II", &FluidForceBreakdown::F_II)
      .def_readonly("F_III", &FluidForceBreakdown::F_III)
      .def_readonly("P_cor", &FluidForceBreakdown::P_cor)
      .def_readonly("m_a", &FluidForceBreakdown::m_a)
      .def_readonly("beta", &FluidForceBreakdown::beta)
      .def("total", &FluidForceBreakdown::total);

  m.def("fluid_forces",
        [](const SolidState& s, double ddot, double zeta_e_R,
           const PhysicalParams& params, const SolidShape& shape) {
          return interior_pressure_profiles(s, ddot, zeta_e_R, params, shape)
              .forces;
        });

  py::class_<FluidState>(m, "FluidState")
      .def(py::init<>())
      .def_readwrite("zeta", &FluidState::zeta)
      .def_readwrite("q", &FluidState::q)
      .def_readwrite("t", &FluidState::t);

  m.def("make_rest_state", &make_rest_state);
  m.def("numerical_flux", [](const StatePoint& l, const StatePoint& r,
                             double g) {
    const FaceFlux f = numerical_flux(l, r, g);
    return std::make_pair(f.mass, f.mom);
  });
  m.def("cfl_dt", &cfl_dt);
  m.def("step_fluid", [](const FluidState& s, double dt, double q_wall,
                         const RadialGrid& grid, const PhysicalParams& p) {
    return step_fluid(s, dt, WallBC{q_wall}, grid, p);
  });
  m.def("resolve_wall_state", &resolve_wall_state);
  m.def("outer_boundary_state", &outer_boundary_state);

  m.def("fluid_energy", &fluid_energy);
  m.def("solid_energy", &solid_energy);
  m.def("coupled_solid_energy", &coupled_solid_energy);
  m.def("mass_total", &mass_total);

  py::class_<CoupledState>(m, "CoupledState")
      .def(py::init<>())
      .def_readwrite("fluid", &CoupledState::fluid)
      .def_readwrite("solid", &CoupledState::solid)
      .def_readwrite("t", &CoupledState::t);

  m.def("make_equilibrium_state", &make_equilibrium_state);
  m.def("coupled_step", &coupled_step, py::arg("cs"), py::arg("dt"),
        py::arg("grid"), py::arg("params"), py::arg("shape"),
        py::arg("with_pressure_corrector") = true);

  m.def("generate_compatible_release",
        [](double delta0, double L, const RadialGrid& grid,
           const PhysicalParams& params, const SolidShape& shape) {
          const ReleaseData rd =
              generate_compatible_release(delta0, L, grid, params, shape);
          return std::make_pair(rd.state, rd.wall_slope);
        });

  m.def("check_compatibility",
        [](const FluidState& fluid0, const SolidState& solid0,
           const RadialGrid& grid, const PhysicalParams& params,
           const SolidShape& shape) {
          const CompatibilityReport rep =
              check_compatibility(fluid0, solid0, grid, params, shape);
          py::dict d;
          d["order0_residual"] = rep.order0_residual;
          d["order1_residual"] = rep.order1_residual;
          d["tol0"] = rep.tol0;
          d["tol1"] = rep.tol1;
          d["pass"] = rep.pass();
          return d;
        });

  m.def("run_coupled",
        [](const CoupledState& cs0, double T_end, double cfl,
           const RadialGrid& grid, const PhysicalParams& params,
           const SolidShape& shape, bool pcor) {
          RunOptions opts;
          opts.T_end = T_end;
          opts.cfl = cfl;
          opts.with_pressure_corrector = pcor;
          return trajectory_to_dict(
              run_coupled(cs0, opts, grid, params, shape));
        },
        py::arg("cs0"), py::arg("T_end"), py::arg("cfl"), py::arg("grid"),
        py::arg("params"), py::arg("shape"),
        py::arg("with_pressure_corrector") = true);

  m.def("run_prescribed",
        [](const FluidState& fluid0, std::function<double(double)> w_of_t,
           double T_end, double cfl, const RadialGrid& grid,
           const PhysicalParams& params, const SolidShape& shape) {
          RunOptions opts;
          opts.T_end = T_end;
          opts.cfl = cfl;
          return trajectory_to_dict(run_prescribed(
              fluid0, MotionSignal::from_function(std::move(w_of_t)), opts,
              grid, params, shape));
        });

  m.def("picard_solve",
        [](const CoupledState& cs0, double T, int iters,
           const RadialGrid& grid, const PhysicalParams& params,
           const SolidShape& shape) {
          const PicardResult res =
              picard_solve(cs0, T, iters, grid, params, shape);
          py::dict d;
          d["diff_history"] = res.diff_history;
          d["dt"] = res.dt;
          d["steps"] = res.steps;
          d["trajectory"] = trajectory_to_dict(res.last);
          return d;
        });

  m.def("parse_config", &parse_config);
  m.def("run_config_file", [](const std::string& path) {
    const RunSummary s = run(load_config(path));
    py::dict d;
    d["mode"] = s.mode;
    d["final_delta"] = s.final_delta;
    d["max_energy_drift"] = s.max_energy_drift;
    d["steps"] = s.steps;
    return d;
  });
}
