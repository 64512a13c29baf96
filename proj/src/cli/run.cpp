#include "vortex/cli.hpp"

#include "vortex/config.hpp"
#include "vortex/errors.hpp"
#include "vortex/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

namespace vortex::cli {

namespace {

using cplx = std::complex<double>;

struct Shared {
  std::string config_path;
  std::string format;
  std::string out_path;
};

struct Emitted {
  std::vector<ResultRecord> records;
  bool converged = true;
  // verify writes its own text lines instead of records
  std::optional<std::string> text;
  bool failed = false;
};

Emitted single(ResultRecord rec, bool converged) {
  Emitted e;
  e.records.push_back(std::move(rec));
  e.converged = converged;
  return e;
}

void put(Json &obj, const std::string &key, cplx v) {
  obj[key + "_re"] = v.real();
  obj[key + "_im"] = v.imag();
}

Json tolerance_echo(const quad::Tolerance &t) { return to_json(t); }

quad::Tolerance pick(const RunConfig &cfg, const quad::Tolerance &fallback) {
  return cfg.tolerance ? *cfg.tolerance : fallback;
}

// ----------------------------------------------------------- subcommands

Emitted ov_matrix(const RunConfig &cfg) {
  const auto &b = cfg.ov;
  ov::OvSettings settings = b.settings;
  settings.tol = pick(cfg, settings.tol);
  const auto r = ov::ov_matrix_element(b.beam, b.internal_initial, b.internal_final, b.com_initial,
                                       b.com_final, b.photons_initial, b.photons_final, settings);
  ResultRecord rec{"ov-matrix"};
  rec.input["beam"] = to_json(b.beam);
  rec.input["internal_initial"] = to_json(b.internal_initial);
  rec.input["internal_final"] = to_json(b.internal_final);
  rec.input["com_initial"] = to_json(b.com_initial);
  rec.input["com_final"] = to_json(b.com_final);
  rec.input["photons_initial"] = b.photons_initial.n;
  rec.input["photons_final"] = b.photons_final.n;
  rec.input["axial_length"] = settings.axial_length;
  rec.input["quadrature"] = tolerance_echo(settings.tol);

  const auto &cp = r.com_photon;
  auto &o = rec.outputs;
  put(o, "amplitude", r.value);
  o["amplitude_abs"] = std::abs(r.value);
  o["channel"] = cp.channel == ov::Channel::absorption ? "absorption" : "emission";
  o["delta_L"] = cp.delta_L_satisfied;
  o["delta_n"] = cp.delta_n_satisfied;
  put(o, "dipole_plus", r.dipole.plus);
  put(o, "dipole_minus", r.dipole.minus);
  put(o, "dipole_z", r.dipole.z);
  put(o, "projected_dipole", r.projected_dipole);
  put(o, "prefactor", r.prefactor);
  put(o, "radial_overlap", cp.radial_overlap);
  o["axial_window"] = cp.axial_window;
  auto &d = rec.diagnostics;
  d["kz_mismatch"] = cp.kz_mismatch;
  d["error_estimate"] = cp.error_estimate;
  d["converged"] = r.converged;
  return single(std::move(rec), r.converged);
}

Emitted ev_matrix(const RunConfig &cfg) {
  const auto &b = cfg.ev;
  const auto tol = pick(cfg, ev::kYAlphaTolerance);
  auto geometry = b.geometry;
  if (auto *k = std::get_if<ev::IntegratedKernel>(&geometry))
    k->tol = pick(cfg, k->tol);
  const auto r = ev::ev_matrix_element(b.beam_initial, b.beam_final, b.internal_initial,
                                       b.internal_final, b.com_initial, b.com_final, geometry,
                                       tol);
  ResultRecord rec{"ev-matrix"};
  rec.input["beam_initial"] = to_json(b.beam_initial);
  rec.input["beam_final"] = to_json(b.beam_final);
  rec.input["internal_initial"] = to_json(b.internal_initial);
  rec.input["internal_final"] = to_json(b.internal_final);
  rec.input["com_initial"] = to_json(b.com_initial);
  rec.input["com_final"] = to_json(b.com_final);
  rec.input["geometry"] = to_json(geometry);
  rec.input["quadrature"] = tolerance_echo(tol);

  auto &o = rec.outputs;
  o["channel"] = ev::channel_name(r.active_channel);
  put(o, "Q", r.Q);
  put(o, "S", r.S);
  put(o, "U", r.U);
  put(o, "total", r.total());
  put(o, "C", r.kernel.C);
  put(o, "D", r.kernel.D);
  put(o, "I", r.kernel.I);
  put(o, "dipole_plus", r.dipole.plus);
  put(o, "dipole_minus", r.dipole.minus);
  put(o, "dipole_z", r.dipole.z);
  auto &d = rec.diagnostics;
  d["error_estimate"] = r.kernel.error_estimate;
  d["evaluations"] = r.kernel.evaluations;
  d["converged"] = r.kernel.converged;
  return single(std::move(rec), r.kernel.converged);
}

Emitted y_alpha(const RunConfig &cfg, int n, double F, double G) {
  const auto tol = pick(cfg, ev::kYAlphaTolerance);
  const auto r = ev::y_alpha(n, F, G, tol);
  ResultRecord rec{"y-alpha"};
  rec.input["n"] = n;
  rec.input["F"] = F;
  rec.input["G"] = G;
  rec.input["quadrature"] = tolerance_echo(tol);
  rec.outputs["n"] = n;
  rec.outputs["F"] = F;
  rec.outputs["G"] = G;
  rec.outputs["value"] = r.value;
  rec.outputs["imag"] = r.imag;
  rec.diagnostics["error_estimate"] = r.error_estimate;
  rec.diagnostics["evaluations"] = r.evaluations;
  rec.diagnostics["converged"] = r.converged;
  return single(std::move(rec), r.converged);
}

// The electron-vortex selection rule over a window of winding numbers, with
// the kernel coefficient of the active channel at the configured geometry.
Emitted selection_table(const RunConfig &cfg, int range) {
  if (range < 0 || range > 4)
    throw ConfigError("selection-table: --range must be in [0, 4]");
  const auto *fixed = std::get_if<ev::FixedKernel>(&cfg.ev.geometry);
  if (!fixed)
    throw ConfigError("selection-table: needs a fixed kernel geometry");
  const auto tol = pick(cfg, ev::kYAlphaTolerance);
  Emitted e;
  Json geo = to_json(cfg.ev.geometry);
  for (int l = -range; l <= range; ++l)
    for (int lp = -range; lp <= range; ++lp) {
      const auto k = ev::kernel_coefficients(l, lp, *fixed, tol);
      e.converged = e.converged && k.converged;
      for (int L = -range; L <= range; ++L)
        for (int Lp = -range; Lp <= range; ++Lp)
          for (int dm = -1; dm <= 1; ++dm) {
            const int diff = (L + l) - (Lp + lp);
            ev::EvChannel ch = ev::EvChannel::none;
            cplx coef = 0.0;
            if (diff == 1 && dm == 1) {
              ch = ev::EvChannel::plus;
              coef = k.C;
            } else if (diff == -1 && dm == -1) {
              ch = ev::EvChannel::minus;
              coef = k.D;
            } else if (diff == 0 && dm == 0) {
              ch = ev::EvChannel::zero;
              coef = k.I;
            }
            ResultRecord rec{"selection-table"};
            rec.input["range"] = range;
            rec.input["geometry"] = geo;
            auto &o = rec.outputs;
            o["l"] = l;
            o["l_prime"] = lp;
            o["L"] = L;
            o["L_prime"] = Lp;
            o["delta_m"] = dm;
            o["channel"] = ev::channel_name(ch);
            put(o, "coefficient", coef);
            rec.diagnostics["converged"] = k.converged;
            e.records.push_back(std::move(rec));
          }
    }
  return e;
}

Emitted ledge_table(std::optional<int> beam_l) {
  std::vector<int> signs;
  if (beam_l)
    signs.push_back(*beam_l);
  else
    signs = {1, -1};
  Emitted e;
  for (int s : signs)
    for (const auto &t : ledge::enumerate_edge_transitions(s)) {
      ResultRecord rec{"ledge"};
      rec.input["beam_l"] = s;
      auto &o = rec.outputs;
      o["edge"] = ledge::edge_name(t.edge);
      o["initial_shell"] = matter::shell_name(t.initial.shell);
      o["initial_two_mj"] = t.initial.two_mj;
      o["final_shell"] = matter::shell_name(t.final_state.shell);
      o["final_two_mj"] = t.final_state.two_mj;
      o["beam_l"] = t.beam_l;
      o["strength"] = t.strength;
      e.records.push_back(std::move(rec));
    }
  return e;
}

Emitted dichroism(const RunConfig &cfg) {
  const auto &b = cfg.ledge;
  const auto coupling = b.helicity();
  const auto r = ledge::dichroism(b.dos, coupling, b.settings);
  ResultRecord rec{"dichroism"};
  rec.input["coupling"] = b.coupling == CouplingMode::kernel ? "kernel" : "selection_rule";
  if (b.coupling == CouplingMode::kernel)
    rec.input["kernel"] = to_json(ev::GeometryMode{b.kernel});
  rec.input["radial_element"] = b.settings.radial_element;
  Json dos = Json::array();
  for (const auto &[key, w] : b.dos.weights()) {
    Json entry = Json::object();
    entry["shell"] = matter::shell_name(key.first);
    entry["two_mj"] = key.second;
    entry["weight"] = w;
    dos.push_back(entry);
  }
  rec.input["dos"] = dos;
  auto &o = rec.outputs;
  o["gamma_plus"] = r.gamma_plus;
  o["gamma_minus"] = r.gamma_minus;
  o["dichroism"] = r.dichroism;
  for (const auto &[edge, rates] : r.per_edge) {
    o[ledge::edge_name(edge) + "_plus"] = rates.first;
    o[ledge::edge_name(edge) + "_minus"] = rates.second;
  }
  rec.diagnostics["C_plus_abs2"] = std::norm(coupling.C_plus);
  rec.diagnostics["D_minus_abs2"] = std::norm(coupling.D_minus);
  return single(std::move(rec), true);
}

Emitted verify() {
  Emitted e;
  std::string text;
  int passed = 0;
  const auto checks = run_invariant_suite();
  for (const auto &c : checks) {
    text += (c.passed ? "PASS " : "FAIL ") + c.module + "." + c.name + ": " + c.detail + "\n";
    passed += c.passed;
  }
  text += std::to_string(passed) + "/" + std::to_string(checks.size()) + " properties passed\n";
  e.text = text;
  e.failed = passed != int(checks.size());
  return e;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Orbital-angular-momentum transition matrix elements for vortex beams",
               "vortexoam"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  Shared shared;
  auto add_shared = [&](CLI::App *sub) {
    sub->add_option("--config", shared.config_path, "YAML configuration file");
    sub->add_option("--format", shared.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", shared.out_path, "Write output to PATH instead of stdout");
  };

  auto *ov_cmd = app.add_subcommand("ov-matrix", "Optical-vortex transition matrix element");
  auto *ev_cmd = app.add_subcommand("ev-matrix", "Electron-vortex transition matrix element");
  auto *y_cmd = app.add_subcommand("y-alpha", "Azimuthal kernel integral Y(n; F, G)");
  auto *sel_cmd = app.add_subcommand("selection-table", "Electron-vortex channel table");
  auto *ledge_cmd = app.add_subcommand("ledge", "L2/L3 edge transition table");
  auto *dich_cmd = app.add_subcommand("dichroism", "Helicity-resolved L-edge rates");
  auto *verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  for (auto *s : {ov_cmd, ev_cmd, y_cmd, sel_cmd, ledge_cmd, dich_cmd, verify_cmd})
    add_shared(s);

  int y_n = 0;
  double y_F = 0.0, y_G = 0.0;
  y_cmd->add_option("--n", y_n, "Combined exponent l - l' + alpha")->required();
  y_cmd->add_option("--F", y_F, "Kernel offset F")->required();
  y_cmd->add_option("--G", y_G, "Kernel cosine weight G (0 <= G < F)")->required();

  int range = 1;
  sel_cmd->add_option("--range", range, "Scan l, l', L, L' over [-range, range]")
      ->capture_default_str();

  int ledge_l = 0;
  auto *ledge_opt = ledge_cmd->add_option("--l", ledge_l, "Beam winding number (+1 or -1)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion &) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  Emitted emitted;
  RunConfig cfg;
  try {
    if (!shared.config_path.empty())
      cfg = load_config(shared.config_path);
    if (!shared.format.empty())
      cfg.format = parse_format(shared.format);

    if (*ov_cmd)
      emitted = ov_matrix(cfg);
    else if (*ev_cmd)
      emitted = ev_matrix(cfg);
    else if (*y_cmd)
      emitted = y_alpha(cfg, y_n, y_F, y_G);
    else if (*sel_cmd)
      emitted = selection_table(cfg, range);
    else if (*ledge_cmd) {
      std::optional<int> l;
      if (ledge_opt->count()) {
        if (ledge_l != 1 && ledge_l != -1)
          throw ConfigError("ledge: --l must be +1 or -1");
        l = ledge_l;
      }
      emitted = ledge_table(l);
    } else if (*dich_cmd)
      emitted = dichroism(cfg);
    else
      emitted = verify();
  } catch (const ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError &e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }

  const std::string body = emitted.text ? *emitted.text : emit(emitted.records, cfg.format);

  std::optional<std::string> path;
  if (!shared.out_path.empty())
    path = shared.out_path;
  else if (const char *env = std::getenv("VORTEX_OUTPUT"); env && *env)
    path = env;
  else if (cfg.output_path)
    path = cfg.output_path;

  if (path) {
    std::ofstream f(*path, std::ios::binary);
    if (!f || !(f << body) || !f.flush()) {
      err << "error: cannot write output to '" << *path << "'\n";
      return kExitDomain;
    }
  } else {
    out << body;
  }

  if (emitted.failed) {
    err << "verify: invariant failures\n";
    return kExitDomain;
  }
  if (!emitted.converged) {
    err << "warning: quadrature did not converge to the requested tolerance\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

} // namespace vortex::cli
