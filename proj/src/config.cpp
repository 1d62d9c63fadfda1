#include "floatswe/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace floatswe {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError(path.empty() ? key : path + "." + key, "unknown key");
    }
  }
}

double get_number(const json& obj, const std::string& path,
                  const std::string& key, double fallback,
                  bool required = false) {
  if (!obj.contains(key)) {
    if (required) throw ConfigError(path + "." + key, "missing required key");
    return fallback;
  }
  if (!obj[key].is_number()) {
    throw ConfigError(path + "." + key, "expected a number");
  }
  return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& path, const std::string& key,
            int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) {
    throw ConfigError(path + "." + key, "expected an integer");
  }
  return obj[key].get<int>();
}

std::string get_string(const json& obj, const std::string& path,
                       const std::string& key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_string()) {
    throw ConfigError(path + "." + key, "expected a string");
  }
  return obj[key].get<std::string>();
}

}  // namespace

const char* run_mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Coupled: return "coupled";
    case RunMode::Prescribed: return "prescribed";
    case RunMode::Picard: return "picard";
    case RunMode::CheckCompat: return "check-compat";
    case RunMode::Audit: return "audit";
  }
  return "coupled";
}

PhysicalParams RunConfig::make_physical_params() const {
  try {
    return make_params(g, rho, h0, R, m, P_atm);
  } catch (const NonPositiveParameter& e) {
    throw ConfigError("params." + e.field, "must be positive");
  }
}

SolidShape RunConfig::make_shape() const {
  if (shape.type == "flat") {
    if (!(shape.h_w_eq > 0.0)) {
      throw ConfigError("shape.h_w_eq", "must be positive");
    }
    return SolidShape::flat(shape.h_w_eq);
  }
  if (shape.type == "parabolic") {
    if (!(shape.h_center > 0.0) || !(shape.h_edge > 0.0)) {
      throw ConfigError("shape", "parabolic heights must be positive");
    }
    const double hc = shape.h_center;
    const double he = shape.h_edge;
    const double Rs = R;
    return SolidShape::profiled(
        [hc, he, Rs](double r) { return hc + (he - hc) * (r / Rs) * (r / Rs); },
        [hc, he, Rs](double r) { return 2.0 * (he - hc) * r / (Rs * Rs); });
  }
  throw ConfigError("shape.type", "unknown shape '" + shape.type + "'");
}

RadialGrid RunConfig::make_radial_grid() const {
  const double r_max = grid.r_max > 0.0 ? grid.r_max : 50.0 * R;
  try {
    return make_grid(R, r_max, grid.N);
  } catch (const InvalidGrid& e) {
    throw ConfigError("grid", e.what());
  }
}

double RunConfig::release_length() const {
  return initial.L > 0.0 ? initial.L : 2.0 * R;
}

double RunConfig::picard_horizon() const {
  return picard.T > 0.0 ? picard.T : 0.2 * R / std::sqrt(g * h0);
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("", "top level must be an object");

  reject_unknown_keys(root, "",
                      {"params", "shape", "grid", "time", "mode", "initial",
                       "prescribed", "picard", "audit", "output", "tolerances",
                       "pressure_corrector"});

  RunConfig cfg;

  if (!root.contains("params") || !root["params"].is_object()) {
    throw ConfigError("params", "missing required section");
  }
  const json& p = root["params"];
  reject_unknown_keys(p, "params", {"g", "rho", "h0", "R", "m", "P_atm"});
  cfg.g = get_number(p, "params", "g", 9.81);
  cfg.rho = get_number(p, "params", "rho", 1000.0);
  cfg.h0 = get_number(p, "params", "h0", 0.0, true);
  cfg.R = get_number(p, "params", "R", 0.0, true);
  cfg.m = get_number(p, "params", "m", 0.0, true);
  cfg.P_atm = get_number(p, "params", "P_atm", 0.0);

  if (root.contains("shape")) {
    const json& s = root["shape"];
    if (!s.is_object()) throw ConfigError("shape", "expected an object");
    reject_unknown_keys(s, "shape", {"type", "h_w_eq", "h_center", "h_edge"});
    cfg.shape.type = get_string(s, "shape", "type", "flat");
    cfg.shape.h_w_eq = get_number(s, "shape", "h_w_eq", cfg.shape.h_w_eq);
    cfg.shape.h_center = get_number(s, "shape", "h_center", cfg.shape.h_w_eq);
    cfg.shape.h_edge = get_number(s, "shape", "h_edge", cfg.shape.h_w_eq);
  }

  if (root.contains("grid")) {
    const json& gsec = root["grid"];
    if (!gsec.is_object()) throw ConfigError("grid", "expected an object");
    reject_unknown_keys(gsec, "grid", {"r_max", "N"});
    cfg.grid.r_max = get_number(gsec, "grid", "r_max", 0.0);
    cfg.grid.N = get_int(gsec, "grid", "N", 2000);
  }

  if (root.contains("time")) {
    const json& t = root["time"];
    if (!t.is_object()) throw ConfigError("time", "expected an object");
    reject_unknown_keys(t, "time",
                        {"T_end", "cfl", "fixed_dt", "snapshot_every"});
    cfg.time.T_end = get_number(t, "time", "T_end", 1.0);
    cfg.time.cfl = get_number(t, "time", "cfl", 0.9);
    cfg.time.fixed_dt = get_number(t, "time", "fixed_dt", 0.0);
    cfg.time.snapshot_every = get_int(t, "time", "snapshot_every", 0);
    if (!(cfg.time.cfl > 0.0 && cfg.time.cfl <= 1.0)) {
      throw ConfigError("time.cfl", "must be in (0, 1]");
    }
    if (!(cfg.time.T_end >= 0.0)) {
      throw ConfigError("time.T_end", "must be non-negative");
    }
  }

  const std::string mode = get_string(root, "", "mode", "coupled");
  if (mode == "coupled") cfg.mode = RunMode::Coupled;
  else if (mode == "prescribed") cfg.mode = RunMode::Prescribed;
  else if (mode == "picard") cfg.mode = RunMode::Picard;
  else if (mode == "check-compat") cfg.mode = RunMode::CheckCompat;
  else if (mode == "audit") cfg.mode = RunMode::Audit;
  else throw ConfigError("mode", "unknown mode '" + mode + "'");

  if (root.contains("initial")) {
    const json& ic = root["initial"];
    if (!ic.is_object()) throw ConfigError("initial", "expected an object");
    reject_unknown_keys(ic, "initial", {"type", "delta0", "L", "w0", "path"});
    cfg.initial.type = get_string(ic, "initial", "type", "equilibrium");
    cfg.initial.delta0 = get_number(ic, "initial", "delta0", 0.0);
    cfg.initial.L = get_number(ic, "initial", "L", 0.0);
    cfg.initial.w0 = get_number(ic, "initial", "w0", 0.0);
    cfg.initial.path = get_string(ic, "initial", "path", "");
    if (cfg.initial.type != "equilibrium" && cfg.initial.type != "release" &&
        cfg.initial.type != "custom") {
      throw ConfigError("initial.type", "unknown type '" + cfg.initial.type + "'");
    }
    if (cfg.initial.type == "custom" && cfg.initial.path.empty()) {
      throw ConfigError("initial.path", "custom initial state needs a path");
    }
  }

  if (root.contains("prescribed")) {
    const json& pr = root["prescribed"];
    if (!pr.is_object()) throw ConfigError("prescribed", "expected an object");
    reject_unknown_keys(pr, "prescribed", {"amplitude", "omega"});
    cfg.prescribed.amplitude = get_number(pr, "prescribed", "amplitude", 0.0);
    cfg.prescribed.omega = get_number(pr, "prescribed", "omega", 1.0);
  }

  if (root.contains("picard")) {
    const json& pc = root["picard"];
    if (!pc.is_object()) throw ConfigError("picard", "expected an object");
    reject_unknown_keys(pc, "picard", {"iterations", "T"});
    cfg.picard.iterations = get_int(pc, "picard", "iterations", 8);
    cfg.picard.T = get_number(pc, "picard", "T", 0.0);
    if (cfg.picard.iterations < 1) {
      throw ConfigError("picard.iterations", "must be >= 1");
    }
  }

  if (root.contains("audit")) {
    const json& au = root["audit"];
    if (!au.is_object()) throw ConfigError("audit", "expected an object");
    reject_unknown_keys(au, "audit", {"trajectories"});
    if (au.contains("trajectories")) {
      if (!au["trajectories"].is_array()) {
        throw ConfigError("audit.trajectories", "expected an array");
      }
      for (const auto& item : au["trajectories"]) {
        if (!item.is_string()) {
          throw ConfigError("audit.trajectories", "expected strings");
        }
        cfg.audit_trajectories.push_back(item.get<std::string>());
      }
    }
  }

  if (root.contains("output")) {
    const json& out = root["output"];
    if (!out.is_object()) throw ConfigError("output", "expected an object");
    reject_unknown_keys(out, "output",
                        {"trajectory", "summary", "snapshots_dir", "interior_dir"});
    cfg.output.trajectory =
        get_string(out, "output", "trajectory", cfg.output.trajectory);
    cfg.output.summary = get_string(out, "output", "summary", cfg.output.summary);
    cfg.output.snapshots_dir = get_string(out, "output", "snapshots_dir", "");
    cfg.output.interior_dir = get_string(out, "output", "interior_dir", "");
  }

  if (root.contains("tolerances")) {
    const json& tol = root["tolerances"];
    if (!tol.is_object()) throw ConfigError("tolerances", "expected an object");
    reject_unknown_keys(tol, "tolerances", {"compat_order0", "compat_order1"});
    cfg.tolerances.compat_order0 =
        get_number(tol, "tolerances", "compat_order0", 0.0);
    cfg.tolerances.compat_order1 =
        get_number(tol, "tolerances", "compat_order1", 0.0);
  }

  if (root.contains("pressure_corrector")) {
    if (!root["pressure_corrector"].is_boolean()) {
      throw ConfigError("pressure_corrector", "expected a boolean");
    }
    cfg.pressure_corrector = root["pressure_corrector"].get<bool>();
  }

  // Surface invalid physical parameters at parse time.
  cfg.make_physical_params();
  cfg.make_shape();
  if (cfg.grid.N < 4) throw ConfigError("grid.N", "need at least 4 cells");
  if (cfg.grid.r_max != 0.0 && cfg.grid.r_max <= cfg.R) {
    throw ConfigError("grid.r_max", "must exceed the solid radius");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string dump_config(const RunConfig& cfg) {
  json root;
  root["params"] = {{"g", cfg.g},       {"rho", cfg.rho}, {"h0", cfg.h0},
                    {"R", cfg.R},       {"m", cfg.m},     {"P_atm", cfg.P_atm}};
  root["shape"] = {{"type", cfg.shape.type},
                   {"h_w_eq", cfg.shape.h_w_eq},
                   {"h_center", cfg.shape.h_center},
                   {"h_edge", cfg.shape.h_edge}};
  root["grid"] = {{"r_max", cfg.grid.r_max}, {"N", cfg.grid.N}};
  root["time"] = {{"T_end", cfg.time.T_end},
                  {"cfl", cfg.time.cfl},
                  {"fixed_dt", cfg.time.fixed_dt},
                  {"snapshot_every", cfg.time.snapshot_every}};
  root["mode"] = run_mode_name(cfg.mode);
  root["initial"] = {{"type", cfg.initial.type},
                     {"delta0", cfg.initial.delta0},
                     {"L", cfg.initial.L},
                     {"w0", cfg.initial.w0},
                     {"path", cfg.initial.path}};
  root["prescribed"] = {{"amplitude", cfg.prescribed.amplitude},
                        {"omega", cfg.prescribed.omega}};
  root["picard"] = {{"iterations", cfg.picard.iterations}, {"T", cfg.picard.T}};
  root["audit"] = {{"trajectories", cfg.audit_trajectories}};
  root["output"] = {{"trajectory", cfg.output.trajectory},
                    {"summary", cfg.output.summary},
                    {"snapshots_dir", cfg.output.snapshots_dir},
                    {"interior_dir", cfg.output.interior_dir}};
  root["tolerances"] = {{"compat_order0", cfg.tolerances.compat_order0},
                        {"compat_order1", cfg.tolerances.compat_order1}};
  root["pressure_corrector"] = cfg.pressure_corrector;
  return root.dump(2);
}

std::string config_hash(const RunConfig& cfg) {
  const std::string text = dump_config(cfg);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace floatswe
