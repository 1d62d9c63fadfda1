#include "floatswe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace floatswe {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj,
                          const std::string& config_hash_hex) {
  std::ofstream out(path);
  if (!out) throw ConfigError("output.trajectory", "cannot open '" + path + "'");
  out << "# schema=" << kTrajectorySchema << "\n";
  out << "# config-hash=" << config_hash_hex << "\n";
  out << "t,delta,w,zeta_R,q_wall,E_sw,E_sol,E_tot,P_cor,mass_total,"
         "subsonic_margin_min\n";
  for (const auto& r : traj.records) {
    out << format_g17(r.t) << ',' << format_g17(r.delta) << ','
        << format_g17(r.w) << ',' << format_g17(r.zeta_R) << ','
        << format_g17(r.q_wall) << ',' << format_g17(r.E_sw) << ','
        << format_g17(r.E_sol) << ',' << format_g17(r.E_tot) << ','
        << format_g17(r.P_cor) << ',' << format_g17(r.mass_total) << ','
        << format_g17(r.subsonic_margin_min) << '\n';
  }
}

void write_snapshot_csv(const std::string& path, const FluidState& state,
                        const RadialGrid& grid, const PhysicalParams& params) {
  std::ofstream out(path);
  if (!out) throw ConfigError("output.snapshots_dir", "cannot open '" + path + "'");
  out << "r,zeta,q,h,froude\n";
  for (int j = 0; j < grid.N; ++j) {
    const double h = params.h0 + state.zeta[j];
    const double froude =
        std::fabs(state.q[j]) / (h * std::sqrt(params.g * h));
    out << format_g17(grid.center[j]) << ',' << format_g17(state.zeta[j])
        << ',' << format_g17(state.q[j]) << ',' << format_g17(h) << ','
        << format_g17(froude) << '\n';
  }
}

void write_interior_csv(const std::string& path, const SolidState& solid,
                        double delta_ddot, double zeta_e_R,
                        const PhysicalParams& params, const SolidShape& shape,
                        int samples) {
  std::ofstream out(path);
  if (!out) throw ConfigError("output.interior_dir", "cannot open '" + path + "'");
  const InteriorPressureField field =
      interior_pressure_profiles(solid, delta_ddot, zeta_e_R, params, shape);
  out << "r,q_i,P_I,P_II,P_III\n";
  for (int i = 0; i <= samples; ++i) {
    const double r = params.R * static_cast<double>(i) / samples;
    out << format_g17(r) << ',' << format_g17(interior_discharge(r, solid.w))
        << ',' << format_g17(field.P_I(r)) << ',' << format_g17(field.P_II(r))
        << ',' << format_g17(field.P_III) << '\n';
  }
}

FluidState read_state_csv(const std::string& path, const RadialGrid& grid) {
  std::ifstream in(path);
  if (!in) throw ConfigError("initial.path", "cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line.rfind("r,zeta,q", 0) != 0) {
    throw ConfigError("initial.path", "expected header 'r,zeta,q'");
  }
  FluidState state;
  state.zeta.reserve(grid.N);
  state.q.reserve(grid.N);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    double values[3];
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(row, field, ',')) {
        throw ConfigError("initial.path", "short row in state CSV");
      }
      values[i] = std::stod(field);
    }
    state.zeta.push_back(values[1]);
    state.q.push_back(values[2]);
  }
  if (static_cast<int>(state.zeta.size()) != grid.N) {
    throw ConfigError("initial.path",
                      "state CSV has " + std::to_string(state.zeta.size()) +
                          " rows but the grid has " + std::to_string(grid.N) +
                          " cells");
  }
  return state;
}

ParsedTrajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("audit", "cannot open '" + path + "'");
  ParsedTrajectory parsed;
  std::string line;

  if (!std::getline(in, line) || line.rfind("# schema=", 0) != 0) {
    throw ConfigError("audit", "'" + path + "' is missing the schema line");
  }
  parsed.schema = std::stoi(line.substr(9));
  if (!std::getline(in, line) || line.rfind("# config-hash=", 0) != 0) {
    throw ConfigError("audit", "'" + path + "' is missing the config hash");
  }
  parsed.config_hash = line.substr(14);
  if (!std::getline(in, line) || line.rfind("t,delta,w,", 0) != 0) {
    throw ConfigError("audit", "'" + path + "' has an unexpected column header");
  }

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string field;
    double values[11];
    for (int i = 0; i < 11; ++i) {
      if (!std::getline(row, field, ',')) {
        throw ConfigError("audit", "short row in '" + path + "'");
      }
      values[i] = std::stod(field);
    }
    TrajectoryRecord rec;
    rec.t = values[0];
    rec.delta = values[1];
    rec.w = values[2];
    rec.zeta_R = values[3];
    rec.q_wall = values[4];
    rec.E_sw = values[5];
    rec.E_sol = values[6];
    rec.E_tot = values[7];
    rec.P_cor = values[8];
    rec.mass_total = values[9];
    rec.subsonic_margin_min = values[10];
    parsed.records.push_back(rec);
  }
  return parsed;
}

}  // namespace floatswe
