#pragma once

// Run configuration: parsing, validation, canonical serialization and the
// deterministic config hash stamped into output files.

#include <cstdint>
#include <string>
#include <vector>

#include "floatswe/params.hpp"

namespace floatswe {

enum class RunMode { Coupled, Prescribed, Picard, CheckCompat, Audit };

const char* run_mode_name(RunMode mode);

struct ShapeSpec {
  std::string type = "flat";  // "flat" | "parabolic"
  double h_w_eq = 0.5;        // flat draft
  double h_center = 0.5;      // parabolic: column height at the axis
  double h_edge = 0.5;        //            and at the rim
};

struct GridSpec {
  double r_max = 0.0;  // 0 = default 50 R
  int N = 2000;
};

struct TimeSpec {
  double T_end = 1.0;
  double cfl = 0.9;
  double fixed_dt = 0.0;
  int snapshot_every = 0;
};

struct InitialSpec {
  std::string type = "equilibrium";  // "equilibrium" | "release" | "custom"
  double delta0 = 0.0;
  double L = 0.0;  // release decay length; 0 = default 2 R
  double w0 = 0.0;
  std::string path;  // custom state CSV (r,zeta,q)
};

struct PrescribedSpec {
  double amplitude = 0.0;  // w_G(t) = amplitude * sin(omega t)
  double omega = 1.0;
};

struct PicardSpec {
  int iterations = 8;
  double T = 0.0;  // 0 = default 0.2 R / sqrt(g h0)
};

struct OutputSpec {
  std::string trajectory = "trajectory.csv";
  std::string summary = "summary.json";
  std::string snapshots_dir;
  std::string interior_dir;
};

struct ToleranceSpec {
  double compat_order0 = 0.0;  // 0 = dimensional default
  double compat_order1 = 0.0;
};

struct RunConfig {
  double g = 9.81;
  double rho = 1000.0;
  double h0 = 1.0;
  double R = 1.0;
  double m = 500.0;
  double P_atm = 0.0;

  ShapeSpec shape;
  GridSpec grid;
  TimeSpec time;
  RunMode mode = RunMode::Coupled;
  InitialSpec initial;
  PrescribedSpec prescribed;
  PicardSpec picard;
  std::vector<std::string> audit_trajectories;
  OutputSpec output;
  ToleranceSpec tolerances;
  bool pressure_corrector = true;

  PhysicalParams make_physical_params() const;
  SolidShape make_shape() const;
  RadialGrid make_radial_grid() const;
  double release_length() const;  // L default 2 R
  double picard_horizon() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Canonical serialization; parse(dump(cfg)) reproduces cfg exactly.
std::string dump_config(const RunConfig& cfg);

// FNV-1a over the canonical serialization, as a hex string.
std::string config_hash(const RunConfig& cfg);

}  // namespace floatswe
