#pragma once

#include "vortex/beams.hpp"
#include "vortex/specfun.hpp"

#include <complex>
#include <string>
#include <vector>

namespace vortex::matter {

using cplx = std::complex<double>;

//! Proton mass in atomic units (electron masses).
inline constexpr double kProtonMass = 1836.15267343;

struct AtomicSystem {
  double m_e = 1.0;
  double m_p = kProtonMass;
  double total_mass = 1.0 + kProtonMass;
  double reduced_mass = kProtonMass / (1.0 + kProtonMass);

  static AtomicSystem from_masses(double m_e, double m_p);
};

//! Internal-motion eigenstate |n, l, m> of the two-particle system.
//! `mu` is the reduced mass; the Bohr radius is 1/mu and W = -mu / (2 n^2).
struct HydrogenicState {
  int n = 1;
  int l = 0;
  int m = 0;
  double mu = 1.0;

  double energy() const { return -mu / (2.0 * n * n); }
  double bohr_radius() const { return 1.0 / mu; }
  void validate() const;
};

cplx hydrogenic_wavefunction(const HydrogenicState &s,
                             const specfun::SphericalPoint &p);

enum class RadialProfile { ring_gaussian, bessel };

/// Centre-of-mass state R(rho) e^{i K_R rho} e^{i K_z z} e^{i L phi}.
///
/// The ring profile is exp(-(rho - rho0)^2 / (4 sigma^2)) and keeps the
/// plane-wave radial factor e^{i K_R rho} verbatim. The bessel profile
/// replaces both by J_L(K_R rho), the regular cylindrical eigenfunction,
/// normalised on a disc of radius r_max. Both are normalised so that
/// 2 pi int |R|^2 rho drho = 1; the axial factor is left unnormalised.
struct ComState {
  double K_R = 0.0;
  double K_z = 0.0;
  int L = 0;
  RadialProfile profile = RadialProfile::ring_gaussian;
  double rho0 = 2.0;
  double sigma = 0.5;
  double r_max = 20.0;

  static ComState ring(int L, double K_R, double K_z, double rho0,
                       double sigma);
  static ComState bessel(int L, double K_R, double K_z, double r_max);

  double K() const;
  void validate() const;
  //! Radial factor including e^{i K_R rho} for the ring profile.
  cplx radial(double rho) const;
  //! Upper radius beyond which radial() is negligible (< e^{-100} relative)
  //! or identically zero.
  double support() const;
};

cplx com_wavefunction(const ComState &s, const beams::CylindricalPoint &p);

enum class Shell { p_half, p_threehalf, d_threehalf, d_fivehalf };

int two_j(Shell s);
int orbital_l(Shell s);
std::string shell_name(Shell s);
//! Inverse of shell_name ("2p1/2", "2p3/2", "3d3/2", "3d5/2").
Shell parse_shell(const std::string &name);

struct CoreState {
  Shell shell = Shell::p_half;
  int two_mj = 1;

  void validate() const;
  bool operator==(const CoreState &) const = default;
};

//! All m_j = -j..j for the shell, ascending.
std::vector<CoreState> enumerate_core_states(Shell shell);

struct PhotonOccupation {
  int n = 0;
  void validate() const;
};

} // namespace vortex::matter
