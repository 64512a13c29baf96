#pragma once

#include "vortex/beams.hpp"
#include "vortex/ev_coupling.hpp"
#include "vortex/ledge.hpp"
#include "vortex/matter.hpp"
#include "vortex/ov_coupling.hpp"
#include "vortex/quadrature.hpp"
#include "vortex/records.hpp"

#include <optional>
#include <string>

namespace vortex::cli {

//! Optical-vortex run: absorption of one l = 1 photon by a ring-shaped
//! centre of mass, internal 1s -> 2p(m=+1) under x polarization.
struct OvBlock {
  beams::VortexBeam beam = beams::VortexBeam::optical(1, 1.0, 1.0);
  matter::HydrogenicState internal_initial{1, 0, 0, 1.0};
  matter::HydrogenicState internal_final{2, 1, 1, 1.0};
  matter::ComState com_initial = matter::ComState::ring(0, 0.0, 0.0, 1.8, 0.4);
  matter::ComState com_final = matter::ComState::ring(1, 0.0, 1.0, 1.8, 0.4);
  matter::PhotonOccupation photons_initial{1};
  matter::PhotonOccupation photons_final{0};
  ov::OvSettings settings{};
};

//! Electron-vortex run: l = 1 -> 0 with a fixed atom (L = L' = 0), internal
//! 1s -> 2p(m=+1), fixed kernel geometry with F = 2, G = 1.
struct EvBlock {
  beams::VortexBeam beam_initial = beams::VortexBeam::electron(1, 1.0, 1.0);
  beams::VortexBeam beam_final = beams::VortexBeam::electron(0, 1.0, 1.0);
  matter::HydrogenicState internal_initial{1, 0, 0, 1.0};
  matter::HydrogenicState internal_final{2, 1, 1, 1.0};
  matter::ComState com_initial = matter::ComState::ring(0, 0.0, 0.0, 1.8, 0.4);
  matter::ComState com_final = matter::ComState::ring(0, 0.0, 0.0, 1.8, 0.4);
  ev::GeometryMode geometry =
      ev::FixedKernel::from_geometry(ev::KernelGeometry::from_fg(2.0, 1.0));
};

enum class CouplingMode { kernel, selection_rule };

struct LedgeBlock {
  ledge::DensityOfStates dos = ledge::DensityOfStates::uniform(1.0);
  ledge::LedgeSettings settings{};
  CouplingMode coupling = CouplingMode::kernel;
  ev::FixedKernel kernel =
      ev::FixedKernel::from_geometry(ev::KernelGeometry::from_fg(2.0, 1.0));

  ledge::HelicityCoupling helicity() const;
};

/// Everything a subcommand may need. Every block has a default, so an empty
/// configuration file is valid; README documents the schema.
struct RunConfig {
  OvBlock ov;
  EvBlock ev;
  LedgeBlock ledge;
  //! Overrides the per-module quadrature tolerances when present.
  std::optional<quad::Tolerance> tolerance;
  Format format = Format::json;
  std::optional<std::string> output_path;
};

//! Parse a YAML configuration. Throws ConfigError on malformed input and
//! DomainError on physically invalid values.
RunConfig parse_config(const std::string &yaml_text);
RunConfig load_config(const std::string &path);

// Echo helpers for the record `input` block.
Json to_json(const beams::VortexBeam &b);
Json to_json(const matter::HydrogenicState &s);
Json to_json(const matter::ComState &s);
Json to_json(const ev::GeometryMode &g);
Json to_json(const quad::Tolerance &t);

} // namespace vortex::cli
