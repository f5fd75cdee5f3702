// sjd: simulation, invariant verification, and phase computation on the
// Siegel-Jacobi disk and upper half-plane.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sjd/verify.hpp"

using nlohmann::json;
using namespace sjd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerifyFail = 4;

// Shortest round-trip decimal representation.
std::string fmt(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

complexd get_complex(const json& j, const std::string& key,
                     std::optional<complexd> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError("missing key: " + key);
  }
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 2)
    throw ConfigError(key + ": expected [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

json put_complex(complexd z) { return json::array({z.real(), z.imag()}); }

Chart parse_chart(const std::string& s) {
  if (s == "disk") return Chart::Disk;
  if (s == "fc") return Chart::FC;
  if (s == "uhp") return Chart::UHP;
  throw ConfigError("chart must be one of disk, fc, uhp");
}

std::string chart_name(Chart c) {
  switch (c) {
    case Chart::Disk: return "disk";
    case Chart::FC: return "fc";
    case Chart::UHP: return "uhp";
  }
  return "?";
}

struct CoeffProfile {
  NonHermitianCoeffs base{};
  NonHermitianCoeffs amplitude{};  // sinusoidal modulation, zero if constant
  double omega = 0.0;
  bool sinusoidal = false;

  NonHermitianCoeffs at(double t) const {
    if (!sinusoidal) return base;
    const double s = std::sin(omega * t);
    return {base.eps_a + s * amplitude.eps_a,
            base.eps_b + s * amplitude.eps_b,
            base.eps_0 + s * amplitude.eps_0,
            base.eps_plus + s * amplitude.eps_plus,
            base.eps_minus + s * amplitude.eps_minus};
  }
};

NonHermitianCoeffs parse_coeff_set(const json& j, const std::string& suffix,
                                   bool required) {
  NonHermitianCoeffs c{};
  const complexd zero{0.0, 0.0};
  auto opt = [&](const std::string& key) {
    return get_complex(j, key + suffix, required && suffix.empty()
                                            ? std::nullopt
                                            : std::optional<complexd>(zero));
  };
  c.eps_a = opt("eps_a");
  c.eps_0 = j.contains("eps_0" + suffix)
                ? complexd{j.at("eps_0" + suffix).get<double>(), 0.0}
                : zero;
  c.eps_plus = opt("eps_plus");
  c.eps_b = j.contains("eps_b" + suffix) ? get_complex(j, "eps_b" + suffix)
                                         : std::conj(c.eps_a);
  c.eps_minus = j.contains("eps_minus" + suffix)
                    ? get_complex(j, "eps_minus" + suffix)
                    : std::conj(c.eps_plus);
  return c;
}

CoeffProfile parse_coeffs(const json& j) {
  if (!j.is_object()) throw ConfigError("coefficients: expected object");
  CoeffProfile p;
  const std::string profile = j.value("profile", std::string("constant"));
  p.base = parse_coeff_set(j, "", true);
  if (profile == "sinusoidal") {
    p.sinusoidal = true;
    p.amplitude = parse_coeff_set(j, "_1", false);
    if (!j.contains("omega"))
      throw ConfigError("sinusoidal profile requires omega");
    p.omega = j.at("omega").get<double>();
  } else if (profile != "constant") {
    throw ConfigError("profile must be constant or sinusoidal");
  }
  return p;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return j;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SJD_SEED")) {
    std::uint64_t s = 0;
    const std::string str(env);
    auto [ptr, ec] = std::from_chars(str.data(), str.data() + str.size(), s);
    if (ec == std::errc{} && ptr == str.data() + str.size()) return s;
    throw ConfigError("SJD_SEED is not an unsigned integer");
  }
  return 12345;
}

struct SimulateOutcome {
  Trajectory traj;
  json sidecar;
  int exit_code = kExitOk;
};

SimulateOutcome run_simulation(const json& cfg) {
  const Chart chart = parse_chart(cfg.value("chart", std::string("disk")));
  if (!cfg.contains("initial")) throw ConfigError("missing key: initial");
  const complexd fiber = get_complex(cfg.at("initial"), "fiber");
  const complexd base = get_complex(cfg.at("initial"), "base");
  const double k = cfg.value("k", 1.0);
  const ModelParams params(k);
  if (!cfg.contains("coefficients"))
    throw ConfigError("missing key: coefficients");
  const CoeffProfile profile = parse_coeffs(cfg.at("coefficients"));

  if (!cfg.contains("time")) throw ConfigError("missing key: time");
  const double span = cfg.at("time").value("span", 0.0);
  const double out_step = cfg.at("time").value("output_step", 0.1);
  if (span <= 0.0) throw ConfigError("time.span must be > 0");
  if (out_step <= 0.0) throw ConfigError("time.output_step must be > 0");

  StepParams sp;
  if (cfg.contains("step")) {
    sp.h = cfg.at("step").value("h", sp.h);
    sp.tol = cfg.at("step").value("tol", sp.tol);
  }

  std::vector<double> grid;
  const int n = static_cast<int>(std::ceil(span / out_step - 1e-12));
  for (int i = 0; i <= n; ++i) grid.push_back(std::min(span, i * out_step));
  if (grid.back() < span) grid.push_back(span);

  SimulateOutcome out;
  try {
    out.traj = integrate_numeric(
        chart, {fiber, base}, [&](double t) { return profile.at(t); }, grid,
        sp, params);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("initial state: ") + e.what());
  }

  const char* status = "complete";
  if (out.traj.status == TrajectoryStatus::DomainExit) {
    status = "domain_exit";
    out.exit_code = kExitDomain;
  } else if (out.traj.status == TrajectoryStatus::StepUnderflow) {
    status = "step_underflow";
    out.exit_code = kExitDomain;
  }

  double e_min = 0.0, e_max = 0.0;
  if (!out.traj.energy.empty()) {
    e_min = e_max = out.traj.energy.front();
    for (double e : out.traj.energy) {
      e_min = std::min(e_min, e);
      e_max = std::max(e_max, e);
    }
  }

  out.sidecar = json{
      {"config", cfg},
      {"status", status},
      {"chart", chart_name(chart)},
      {"samples", out.traj.times.size()},
      {"conserved", json{{"energy_min", e_min},
                         {"energy_max", e_max},
                         {"energy_drift", e_max - e_min}}},
  };
  if (!out.traj.times.empty()) {
    out.sidecar["final"] = json{
        {"t", out.traj.times.back()},
        {"fiber", put_complex(out.traj.states.back()[0])},
        {"base", put_complex(out.traj.states.back()[1])},
        {"phi_D", out.traj.phi_d_cum.back()},
        {"phi_B", out.traj.phi_b_cum.back()},
    };
  }
  return out;
}

void write_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  const char* fiber_name = traj.chart == Chart::Disk
                               ? "z"
                               : (traj.chart == Chart::FC ? "eta" : "u");
  const char* base_name = traj.chart == Chart::UHP ? "v" : "w";
  const char* margin_name = traj.chart == Chart::UHP ? "im_v_margin" : "abs_w";
  out << "t,re_" << fiber_name << ",im_" << fiber_name << ",re_" << base_name
      << ",im_" << base_name << ",energy," << margin_name
      << ",phi_D_cum,phi_B_cum\n";
  for (size_t i = 0; i < traj.times.size(); ++i) {
    out << fmt(traj.times[i]) << ',' << fmt(traj.states[i][0].real()) << ','
        << fmt(traj.states[i][0].imag()) << ',' << fmt(traj.states[i][1].real())
        << ',' << fmt(traj.states[i][1].imag()) << ',' << fmt(traj.energy[i])
        << ',' << fmt(traj.domain_margin[i]) << ',' << fmt(traj.phi_d_cum[i])
        << ',' << fmt(traj.phi_b_cum[i]) << '\n';
  }
}

int cmd_simulate(const std::string& config_path) {
  const json cfg = load_config(config_path);
  SimulateOutcome out = run_simulation(cfg);
  std::string csv_path = "trajectory.csv", json_path = "trajectory.json";
  if (cfg.contains("output")) {
    csv_path = cfg.at("output").value("csv", csv_path);
    json_path = cfg.at("output").value("json", json_path);
  }
  write_csv(out.traj, csv_path);
  out.sidecar["exit_code"] = out.exit_code;
  std::ofstream js(json_path);
  if (!js) throw ConfigError("cannot open output file: " + json_path);
  js << out.sidecar.dump(2) << '\n';
  std::cout << "wrote " << csv_path << " (" << out.traj.times.size()
            << " samples, status " << out.sidecar["status"].get<std::string>()
            << ")\n";
  return out.exit_code;
}

int cmd_verify(std::uint64_t seed, int samples, bool inject_fc_bug) {
  const VerifyReport rep = run_verification(seed, samples, inject_fc_bug);
  std::cout << "verification seed=" << seed << " samples=" << samples << "\n";
  for (const auto& r : rep.results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
              << "  max_err=" << fmt(r.max_error) << "  tol=" << fmt(r.tolerance)
              << "  n=" << r.samples << "\n";
  }
  const bool ok = rep.all_pass();
  std::cout << (ok ? "all invariants pass" : "verification FAILED") << "\n";
  return ok ? kExitOk : kExitVerifyFail;
}

struct PathSpec {
  std::vector<FCPoint> points;
  double length = 0.0;
};

PathSpec build_path(const json& p, int segments) {
  PathSpec out;
  const std::string type = p.value("type", std::string("circle"));
  if (type == "circle") {
    const complexd center = get_complex(p, "center", complexd{0.0, 0.0});
    const double radius = p.value("radius", 0.0);
    const double turns = p.value("turns", 1.0);
    const complexd eta = get_complex(p, "eta", complexd{0.0, 0.0});
    if (radius < 0.0) throw ConfigError("path.radius must be >= 0");
    out.points.reserve(segments + 1);
    for (int i = 0; i <= segments; ++i) {
      const double th = 2.0 * M_PI * turns * i / segments;
      const complexd w = center + std::polar(radius, th);
      if (std::abs(w) >= 1.0 - kBoundaryMargin)
        throw DomainError("phase path leaves the disk");
      out.points.emplace_back(eta, DiskPoint{w});
    }
    out.length = 2.0 * M_PI * radius * std::abs(turns);
  } else if (type == "polyline") {
    if (!p.contains("vertices") || !p.at("vertices").is_array() ||
        p.at("vertices").size() < 2)
      throw ConfigError("polyline path needs >= 2 vertices");
    std::vector<FCPoint> verts;
    for (const auto& v : p.at("vertices"))
      verts.emplace_back(get_complex(v, "eta"),
                         DiskPoint{get_complex(v, "w")});
    const int per_edge =
        std::max(1, segments / static_cast<int>(verts.size() - 1));
    for (size_t e = 0; e + 1 < verts.size(); ++e) {
      for (int i = (e == 0 ? 0 : 1); i <= per_edge; ++i) {
        const double s = static_cast<double>(i) / per_edge;
        const complexd eta = verts[e].eta + s * (verts[e + 1].eta - verts[e].eta);
        const complexd w = verts[e].w.w + s * (verts[e + 1].w.w - verts[e].w.w);
        if (std::abs(w) >= 1.0 - kBoundaryMargin)
          throw DomainError("phase path leaves the disk");
        out.points.emplace_back(eta, DiskPoint{w});
      }
      out.length += std::hypot(std::abs(verts[e + 1].eta - verts[e].eta),
                               std::abs(verts[e + 1].w.w - verts[e].w.w));
    }
  } else {
    throw ConfigError("path.type must be circle or polyline");
  }
  return out;
}

int cmd_phase(const std::string& config_path) {
  const json cfg = load_config(config_path);
  const double k = cfg.value("k", 1.0);
  const ModelParams params(k);
  if (!cfg.contains("path")) throw ConfigError("missing key: path");
  const int segments = cfg.at("path").value("segments", 10000);
  if (segments < 2) throw ConfigError("path.segments must be >= 2");

  const PathSpec fine = build_path(cfg.at("path"), segments);
  const PathSpec coarse = build_path(cfg.at("path"), segments / 2);
  const double phi_fine = berry_phase_fc(fine.points, params);
  const double phi_coarse = berry_phase_fc(coarse.points, params);
  // Midpoint rule is second order, so Richardson weights are 4/3 and -1/3.
  const double richardson = (4.0 * phi_fine - phi_coarse) / 3.0;

  json out{
      {"phi_B", phi_fine},
      {"phi_B_coarse", phi_coarse},
      {"phi_B_richardson", richardson},
      {"path_length", fine.length},
      {"segments", segments},
      {"k", k},
  };

  if (cfg.contains("trajectory")) {
    SimulateOutcome sim = run_simulation(cfg.at("trajectory"));
    if (sim.exit_code != kExitOk) return sim.exit_code;
    out["phi_D"] = sim.traj.phi_d_cum.back();
    out["trajectory_phi_B"] = sim.traj.phi_b_cum.back();
  }

  std::cout << out.dump(2) << '\n';
  if (cfg.contains("output")) {
    const std::string path = cfg.at("output").get<std::string>();
    std::ofstream js(path);
    if (!js) throw ConfigError("cannot open output file: " + path);
    js << out.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Siegel-Jacobi disk dynamics toolkit"};
  app.require_subcommand(1);

  std::string sim_config, phase_config;
  auto* sim = app.add_subcommand("simulate", "integrate a trajectory");
  sim->add_option("--config", sim_config, "JSON run configuration")
      ->required();

  std::uint64_t seed = 0;
  bool seed_given = false;
  int samples = 200;
  bool inject = false;
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  ver->add_option("--seed", seed, "RNG seed (default: SJD_SEED env or 12345)")
      ->each([&](const std::string&) { seed_given = true; });
  ver->add_option("--samples", samples, "samples per invariant");
  ver->add_flag("--inject-fc-bug", inject,
                "negative control: corrupt the FC map");

  auto* ph = app.add_subcommand("phase", "compute phases along a path");
  ph->add_option("--config", phase_config, "JSON phase configuration")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (sim->parsed()) return cmd_simulate(sim_config);
    if (ver->parsed())
      return cmd_verify(seed_given ? seed : default_seed(), samples, inject);
    if (ph->parsed()) return cmd_phase(phase_config);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
