#include "vortex/config.hpp"
#include "vortex/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace vortex::cli {

namespace {

void check_keys(const YAML::Node &node, const std::string &where,
                std::initializer_list<const char *> allowed) {
  if (!node.IsMap())
    throw ConfigError(where + ": expected a table");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto &kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!ok.count(key))
      throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <class T> T get(const YAML::Node &node, const char *key, T fallback) {
  const YAML::Node v = node[key];
  if (!v)
    return fallback;
  try {
    return v.as<T>();
  } catch (const YAML::Exception &) {
    throw ConfigError(std::string("bad value for '") + key + "'");
  }
}

beams::VortexBeam read_beam(const YAML::Node &n, const std::string &where,
                            const beams::VortexBeam &fallback) {
  if (!n)
    return fallback;
  check_keys(n, where, {"l", "k_perp", "k_z", "amplitude", "polarization"});
  const int l = get(n, "l", fallback.l);
  const double k_perp = get(n, "k_perp", fallback.k_perp);
  const double k_z = get(n, "k_z", fallback.k_z);
  const double amp = get(n, "amplitude", fallback.amplitude);
  if (fallback.kind == beams::BeamKind::optical) {
    beams::Vec3 pol = fallback.polarization;
    if (const auto p = n["polarization"]) {
      if (!p.IsSequence() || p.size() != 3)
        throw ConfigError(where + ".polarization: expected [x, y, z]");
      for (std::size_t i = 0; i < 3; ++i)
        pol[i] = p[i].as<double>();
    }
    return beams::VortexBeam::optical(l, k_perp, k_z, amp, pol);
  }
  if (n["polarization"])
    throw ConfigError(where + ": electron beams carry no polarization");
  return beams::VortexBeam::electron(l, k_perp, k_z, amp);
}

matter::HydrogenicState read_internal(const YAML::Node &n, const std::string &where,
                                      matter::HydrogenicState fallback, double mu) {
  fallback.mu = mu;
  if (!n)
    return fallback;
  check_keys(n, where, {"n", "l", "m"});
  matter::HydrogenicState s{get(n, "n", fallback.n), get(n, "l", fallback.l),
                            get(n, "m", fallback.m), mu};
  s.validate();
  return s;
}

matter::ComState read_com(const YAML::Node &n, const std::string &where,
                          const matter::ComState &fallback) {
  if (!n)
    return fallback;
  check_keys(n, where, {"profile", "L", "K_R", "K_z", "rho0", "sigma", "r_max"});
  const std::string profile = get<std::string>(
      n, "profile",
      fallback.profile == matter::RadialProfile::ring_gaussian ? "ring" : "bessel");
  const int L = get(n, "L", fallback.L);
  const double K_R = get(n, "K_R", fallback.K_R);
  const double K_z = get(n, "K_z", fallback.K_z);
  if (profile == "ring")
    return matter::ComState::ring(L, K_R, K_z, get(n, "rho0", fallback.rho0),
                                  get(n, "sigma", fallback.sigma));
  if (profile == "bessel")
    return matter::ComState::bessel(L, K_R, K_z, get(n, "r_max", fallback.r_max));
  throw ConfigError(where + ".profile: expected ring or bessel");
}

ev::GeometryMode read_geometry(const YAML::Node &n, const EvBlock &ev) {
  if (!n)
    return ev.geometry;
  const std::string mode = get<std::string>(n, "mode", "fixed");
  if (mode == "fixed") {
    check_keys(n, "ev.geometry", {"mode", "F", "G", "kappa", "lambda", "eta",
                                  "rho_v", "z_v", "rho_r", "z_r"});
    if (n["rho_v"] || n["rho_r"] || n["z_v"] || n["z_r"]) {
      if (n["F"] || n["G"] || n["kappa"] || n["lambda"] || n["eta"])
        throw ConfigError("ev.geometry: give either coordinates or F/G weights");
      ev::KernelGeometry g{get(n, "rho_v", 0.0), get(n, "z_v", 0.0),
                           get(n, "rho_r", 0.0), get(n, "z_r", 0.0)};
      return ev::FixedKernel::from_geometry(g);
    }
    if (!n["F"] || !n["G"])
      throw ConfigError("ev.geometry: fixed mode needs F and G (or coordinates)");
    const double F = n["F"].as<double>(), G = n["G"].as<double>();
    const auto geo = ev::KernelGeometry::from_fg(F, G);
    ev::FixedKernel k{F, G, get(n, "kappa", geo.rho_v), get(n, "lambda", geo.rho_r),
                      get(n, "eta", geo.z_v - geo.z_r)};
    return k;
  }
  if (mode == "integrated") {
    check_keys(n, "ev.geometry", {"mode", "r_max", "l_z", "tube_radius"});
    ev::IntegratedKernel k{ev.beam_initial, ev.beam_final, ev.com_initial, ev.com_final};
    k.r_max = get(n, "r_max", 20.0 / ev.beam_initial.k_perp);
    k.l_z = get(n, "l_z", 2.0 * M_PI / std::abs(ev.beam_initial.k_z));
    k.tube_radius = get(n, "tube_radius", k.tube_radius);
    return k;
  }
  throw ConfigError("ev.geometry.mode: expected fixed or integrated");
}

ledge::DensityOfStates read_dos(const YAML::Node &n) {
  if (!n.IsSequence())
    throw ConfigError("ledge.dos: expected a list of {shell, mj, weight}");
  ledge::DensityOfStates dos;
  for (const auto &e : n) {
    check_keys(e, "ledge.dos[]", {"shell", "mj", "weight"});
    if (!e["shell"] || !e["mj"] || !e["weight"])
      throw ConfigError("ledge.dos[]: shell, mj and weight are required");
    const auto shell = matter::parse_shell(e["shell"].as<std::string>());
    const double mj = e["mj"].as<double>();
    const double two = 2.0 * mj;
    if (std::abs(two - std::round(two)) > 1e-12)
      throw ConfigError("ledge.dos[]: mj must be a half-integer");
    dos.set(shell, static_cast<int>(std::lround(two)), e["weight"].as<double>());
  }
  return dos;
}

} // namespace

ledge::HelicityCoupling LedgeBlock::helicity() const {
  if (coupling == CouplingMode::selection_rule)
    return ledge::HelicityCoupling::selection_rule_mode();
  return ledge::HelicityCoupling::from_kernel(kernel);
}

RunConfig parse_config(const std::string &yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception &e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  RunConfig cfg;
  if (!root || root.IsNull())
    return cfg;
  try {
    check_keys(root, "config", {"format", "output", "quadrature", "system", "ov", "ev", "ledge"});
    if (root["format"])
      cfg.format = parse_format(root["format"].as<std::string>());
    if (root["output"])
      cfg.output_path = root["output"].as<std::string>();
    if (const auto q = root["quadrature"]) {
      check_keys(q, "quadrature", {"abs_tol", "rel_tol", "max_depth"});
      const quad::Tolerance base{};
      cfg.tolerance = quad::Tolerance{get(q, "abs_tol", base.abs_tol),
                                      get(q, "rel_tol", base.rel_tol),
                                      get(q, "max_depth", base.max_depth)};
      try {
        cfg.tolerance->validate();
      } catch (const DomainError &e) {
        throw ConfigError(e.what());
      }
    }
    double mu = 1.0;
    if (const auto s = root["system"]) {
      check_keys(s, "system", {"m_e", "m_p"});
      mu = matter::AtomicSystem::from_masses(get(s, "m_e", 1.0), get(s, "m_p", matter::kProtonMass))
               .reduced_mass;
    }
    if (const auto o = root["ov"]) {
      check_keys(o, "ov", {"beam", "internal_initial", "internal_final", "com_initial",
                           "com_final", "photons_initial", "photons_final", "axial_length"});
      auto &b = cfg.ov;
      b.beam = read_beam(o["beam"], "ov.beam", b.beam);
      b.internal_initial = read_internal(o["internal_initial"], "ov.internal_initial", b.internal_initial, mu);
      b.internal_final = read_internal(o["internal_final"], "ov.internal_final", b.internal_final, mu);
      b.com_initial = read_com(o["com_initial"], "ov.com_initial", b.com_initial);
      b.com_final = read_com(o["com_final"], "ov.com_final", b.com_final);
      b.photons_initial.n = get(o, "photons_initial", b.photons_initial.n);
      b.photons_final.n = get(o, "photons_final", b.photons_final.n);
      b.photons_initial.validate();
      b.photons_final.validate();
      b.settings.axial_length = get(o, "axial_length", b.settings.axial_length);
    } else {
      cfg.ov.internal_initial.mu = cfg.ov.internal_final.mu = mu;
    }
    if (const auto e = root["ev"]) {
      check_keys(e, "ev", {"beam_initial", "beam_final", "internal_initial", "internal_final",
                           "com_initial", "com_final", "geometry"});
      auto &b = cfg.ev;
      b.beam_initial = read_beam(e["beam_initial"], "ev.beam_initial", b.beam_initial);
      b.beam_final = read_beam(e["beam_final"], "ev.beam_final", b.beam_final);
      b.internal_initial = read_internal(e["internal_initial"], "ev.internal_initial", b.internal_initial, mu);
      b.internal_final = read_internal(e["internal_final"], "ev.internal_final", b.internal_final, mu);
      b.com_initial = read_com(e["com_initial"], "ev.com_initial", b.com_initial);
      b.com_final = read_com(e["com_final"], "ev.com_final", b.com_final);
      b.geometry = read_geometry(e["geometry"], b);
    } else {
      cfg.ev.internal_initial.mu = cfg.ev.internal_final.mu = mu;
    }
    if (const auto l = root["ledge"]) {
      check_keys(l, "ledge", {"radial_element", "coupling", "kernel", "dos"});
      auto &b = cfg.ledge;
      b.settings.radial_element = get(l, "radial_element", b.settings.radial_element);
      const auto mode = get<std::string>(l, "coupling", "kernel");
      if (mode == "kernel")
        b.coupling = CouplingMode::kernel;
      else if (mode == "selection_rule")
        b.coupling = CouplingMode::selection_rule;
      else
        throw ConfigError("ledge.coupling: expected kernel or selection_rule");
      if (const auto k = l["kernel"]) {
        check_keys(k, "ledge.kernel", {"F", "G", "kappa", "lambda"});
        if (!k["F"] || !k["G"])
          throw ConfigError("ledge.kernel: F and G are required");
        const double F = k["F"].as<double>(), G = k["G"].as<double>();
        const auto geo = ev::KernelGeometry::from_fg(F, G);
        b.kernel = {F, G, get(k, "kappa", geo.rho_v), get(k, "lambda", geo.rho_r), 0.0};
      }
      if (const auto d = l["dos"])
        b.dos = read_dos(d);
    }
  } catch (const YAML::Exception &e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Json to_json(const beams::VortexBeam &b) {
  Json j = Json::object();
  j["kind"] = b.kind == beams::BeamKind::optical ? "optical" : "electron";
  j["l"] = b.l;
  j["k_perp"] = b.k_perp;
  j["k_z"] = b.k_z;
  j["omega"] = b.omega;
  j["amplitude"] = b.amplitude;
  if (b.kind == beams::BeamKind::optical)
    j["polarization"] = {b.polarization[0], b.polarization[1], b.polarization[2]};
  return j;
}

Json to_json(const matter::HydrogenicState &s) {
  Json j = Json::object();
  j["n"] = s.n;
  j["l"] = s.l;
  j["m"] = s.m;
  j["mu"] = s.mu;
  return j;
}

Json to_json(const matter::ComState &s) {
  Json j = Json::object();
  const bool ring = s.profile == matter::RadialProfile::ring_gaussian;
  j["profile"] = ring ? "ring" : "bessel";
  j["L"] = s.L;
  j["K_R"] = s.K_R;
  j["K_z"] = s.K_z;
  if (ring) {
    j["rho0"] = s.rho0;
    j["sigma"] = s.sigma;
  } else {
    j["r_max"] = s.r_max;
  }
  return j;
}

Json to_json(const ev::GeometryMode &g) {
  Json j = Json::object();
  if (const auto *f = std::get_if<ev::FixedKernel>(&g)) {
    j["mode"] = "fixed";
    j["F"] = f->F;
    j["G"] = f->G;
    j["kappa"] = f->kappa;
    j["lambda"] = f->lambda;
    j["eta"] = f->eta;
  } else {
    const auto &k = std::get<ev::IntegratedKernel>(g);
    j["mode"] = "integrated";
    j["r_max"] = k.r_max;
    j["l_z"] = k.l_z;
    j["tube_radius"] = k.tube_radius;
    j["quadrature"] = to_json(k.tol);
  }
  return j;
}

Json to_json(const quad::Tolerance &t) {
  Json j = Json::object();
  j["abs_tol"] = t.abs_tol;
  j["rel_tol"] = t.rel_tol;
  j["max_depth"] = t.max_depth;
  return j;
}

} // namespace vortex::cli
