#include "floatswe/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>

#include "floatswe/io.hpp"
#include "json.hpp"

namespace floatswe {

namespace {

using nlohmann::json;

CoupledState build_initial_state(const RunConfig& cfg, const RadialGrid& grid,
                                 const PhysicalParams& params,
                                 const SolidShape& shape) {
  if (cfg.initial.type == "equilibrium") {
    return make_equilibrium_state(grid);
  }
  if (cfg.initial.type == "release") {
    return generate_compatible_release(cfg.initial.delta0,
                                       cfg.release_length(), grid, params,
                                       shape)
        .state;
  }
  CoupledState cs;
  cs.fluid = read_state_csv(cfg.initial.path, grid);
  cs.solid = {cfg.initial.delta0, cfg.initial.w0};
  cs.t = 0.0;
  return cs;
}

std::string snapshot_name(const std::string& dir, const char* stem, int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s_%06d.csv", stem, index);
  return (std::filesystem::path(dir) / buf).string();
}

void write_snapshots(const RunConfig& cfg, const Trajectory& traj,
                     const RadialGrid& grid, const PhysicalParams& params,
                     const SolidShape& shape) {
  if (!cfg.output.snapshots_dir.empty() && !traj.snapshots.empty()) {
    std::filesystem::create_directories(cfg.output.snapshots_dir);
    for (size_t i = 0; i < traj.snapshots.size(); ++i) {
      write_snapshot_csv(
          snapshot_name(cfg.output.snapshots_dir, "snapshot",
                        static_cast<int>(i)),
          traj.snapshots[i].second, grid, params);
    }
  }
  if (cfg.output.interior_dir.empty() || traj.snapshots.empty()) return;
  std::filesystem::create_directories(cfg.output.interior_dir);
  for (size_t i = 0; i < traj.snapshots.size(); ++i) {
    const double t_snap = traj.snapshots[i].first;
    // Records and snapshots share step times.
    const TrajectoryRecord* match = nullptr;
    for (const auto& rec : traj.records) {
      if (rec.t == t_snap) {
        match = &rec;
        break;
      }
    }
    if (match == nullptr) continue;
    const SolidState solid{match->delta, match->w};
    const double ddot =
        solid_rhs(solid, match->zeta_R, params, shape, cfg.pressure_corrector);
    write_interior_csv(
        snapshot_name(cfg.output.interior_dir, "interior",
                      static_cast<int>(i)),
        solid, ddot, match->zeta_R, params, shape);
  }
}

double min_margin_over_run(const Trajectory& traj) {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& rec : traj.records) {
    margin = std::min(margin, rec.subsonic_margin_min);
  }
  return margin;
}

}  // namespace

RunSummary run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  const PhysicalParams params = cfg.make_physical_params();
  const SolidShape shape = cfg.make_shape();
  const RadialGrid grid = cfg.make_radial_grid();
  const std::string hash = config_hash(cfg);

  RunSummary summary;
  summary.mode = run_mode_name(cfg.mode);

  json extra;

  if (cfg.mode == RunMode::Audit) {
    const std::string report = audit_files(cfg.audit_trajectories);
    std::ofstream out(cfg.output.summary);
    if (!out) throw ConfigError("output.summary", "cannot open summary file");
    out << report << "\n";
    return summary;
  }

  const CoupledState cs0 = build_initial_state(cfg, grid, params, shape);

  if (cfg.mode == RunMode::CheckCompat) {
    const CompatibilityReport report = check_compatibility(
        cs0.fluid, cs0.solid, grid, params, shape, cfg.tolerances.compat_order0,
        cfg.tolerances.compat_order1);
    summary.compat_pass = report.pass();
    summary.compat_order0 = report.order0_residual;
    summary.compat_order1 = report.order1_residual;
    summary.final_delta = cs0.solid.delta;
    extra["compatibility"] = {{"order0_residual", report.order0_residual},
                              {"order1_residual", report.order1_residual},
                              {"tol0", report.tol0},
                              {"tol1", report.tol1},
                              {"pass", report.pass()}};
  } else {
    RunOptions opts;
    opts.T_end = cfg.time.T_end;
    opts.cfl = cfg.time.cfl;
    opts.fixed_dt = cfg.time.fixed_dt;
    opts.snapshot_every = cfg.time.snapshot_every;
    opts.with_pressure_corrector = cfg.pressure_corrector;

    Trajectory traj;
    if (cfg.mode == RunMode::Coupled) {
      traj = run_coupled(cs0, opts, grid, params, shape);
    } else if (cfg.mode == RunMode::Prescribed) {
      const double amp = cfg.prescribed.amplitude;
      const double omega = cfg.prescribed.omega;
      const MotionSignal motion = MotionSignal::from_function(
          [amp, omega](double t) { return amp * std::sin(omega * t); });
      traj = run_prescribed(cs0.fluid, motion, opts, grid, params, shape);
    } else {  // Picard
      const PicardResult result =
          picard_solve(cs0, cfg.picard_horizon(), cfg.picard.iterations, grid,
                       params, shape);
      traj = result.last;
      extra["picard"] = {{"diff_history", result.diff_history},
                         {"dt", result.dt},
                         {"steps", result.steps}};
    }

    write_trajectory_csv(cfg.output.trajectory, traj, hash);
    write_snapshots(cfg, traj, grid, params, shape);

    if (cfg.mode != RunMode::Picard) {
      const AuditReport audit = audit_run(traj);
      summary.max_energy_drift = audit.max_energy_drift;
      summary.max_mass_residual = audit.max_mass_residual_per_step;
      summary.min_subsonic_margin = min_margin_over_run(traj);
      summary.steps = audit.steps;
    } else {
      summary.steps = static_cast<int>(traj.records.size()) - 1;
    }
    if (!traj.records.empty()) {
      summary.final_delta = traj.records.back().delta;
    }
  }

  const auto finish = std::chrono::steady_clock::now();
  summary.wall_clock_s =
      std::chrono::duration<double>(finish - start).count();

  json out_json = {{"mode", summary.mode},
                   {"config_hash", hash},
                   {"final_delta", summary.final_delta},
                   {"max_energy_drift", summary.max_energy_drift},
                   {"max_mass_residual_per_step", summary.max_mass_residual},
                   {"min_subsonic_margin", summary.min_subsonic_margin},
                   {"step_count", summary.steps},
                   {"wall_clock_s", summary.wall_clock_s}};
  for (auto& [key, value] : extra.items()) out_json[key] = value;

  std::ofstream out(cfg.output.summary);
  if (!out) throw ConfigError("output.summary", "cannot open summary file");
  out << out_json.dump(2) << "\n";
  return summary;
}

std::string audit_files(const std::vector<std::string>& paths) {
  if (paths.empty()) throw ConfigError("audit", "no trajectory files given");

  json files = json::array();
  std::vector<int> steps;
  std::vector<double> drifts;

  for (const auto& path : paths) {
    const ParsedTrajectory parsed = read_trajectory_csv(path);
    const auto& rec = parsed.records;
    if (rec.size() < 2) {
      throw ConfigError("audit", "'" + path + "' has fewer than 2 rows");
    }

    // The file does not carry R, but q_wall = -(R/2) w recovers it whenever
    // the solid moved at all.
    double radius = 0.0;
    for (const auto& r : rec) {
      if (std::fabs(r.w) > 0.0) {
        radius = -2.0 * r.q_wall / r.w;
        break;
      }
    }

    const double E0 = rec.front().E_tot;
    double max_drift = 0.0;
    double max_mass_residual = 0.0;
    for (size_t k = 1; k < rec.size(); ++k) {
      max_drift = std::max(max_drift, std::fabs(rec[k].E_tot - E0));
      const double dt = rec[k].t - rec[k - 1].t;
      // Wall exchange from the trapezoid of the recorded discharge. This is
      // a reconstruction, not the stage-exact ledger the in-memory audit has.
      const double exchanged = dt * 2.0 * std::numbers::pi * radius * 0.5 *
                               (rec[k].q_wall + rec[k - 1].q_wall);
      const double residual =
          std::fabs(rec[k].mass_total - rec[k - 1].mass_total - exchanged);
      max_mass_residual = std::max(max_mass_residual, residual);
    }

    files.push_back({{"path", path},
                     {"steps", rec.size() - 1},
                     {"max_energy_drift", max_drift},
                     {"max_mass_residual", max_mass_residual}});
    steps.push_back(static_cast<int>(rec.size()) - 1);
    drifts.push_back(max_drift);
  }

  json report = {{"files", files}};
  report["max_energy_drift"] = *std::max_element(drifts.begin(), drifts.end());
  double worst_mass = 0.0;
  for (const auto& f : files) {
    worst_mass = std::max(worst_mass, f["max_mass_residual"].get<double>());
  }
  report["mass_residual"] = worst_mass;
  report["observed_order"] =
      steps.size() >= 2 ? observed_order(steps, drifts) : 0.0;
  return report.dump(2);
}

}  // namespace floatswe
