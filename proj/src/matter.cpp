#include "vortex/matter.hpp"
#include "vortex/errors.hpp"

#include <cmath>
#include <numbers>

namespace vortex::matter {

namespace {

constexpr double kPi = std::numbers::pi;

// int_0^inf exp(-(rho - rho0)^2 / (2 sigma^2)) rho drho
double ring_gaussian_moment(double rho0, double sigma) {
  const double s2 = sigma * sigma;
  return s2 * std::exp(-rho0 * rho0 / (2.0 * s2)) +
         rho0 * sigma * std::sqrt(kPi / 2.0) *
             (1.0 + std::erf(rho0 / (sigma * std::numbers::sqrt2)));
}

// int_0^R J_L(k rho)^2 rho drho (Lommel)
double bessel_disc_moment(int L, double k, double r) {
  const double x = k * r;
  const double j = specfun::bessel_j(L, x);
  return 0.5 * r * r *
         (j * j - specfun::bessel_j(L - 1, x) * specfun::bessel_j(L + 1, x));
}

} // namespace

AtomicSystem AtomicSystem::from_masses(double m_e, double m_p) {
  if (!(m_e > 0.0) || !(m_p > 0.0))
    throw DomainError("atomic system: masses must be positive");
  AtomicSystem a;
  a.m_e = m_e;
  a.m_p = m_p;
  a.total_mass = m_e + m_p;
  a.reduced_mass = m_e * m_p / a.total_mass;
  return a;
}

void HydrogenicState::validate() const {
  if (n < 1 || l < 0 || l >= n || std::abs(m) > l)
    throw DomainError("hydrogenic state: invalid quantum numbers (n=" +
                      std::to_string(n) + ", l=" + std::to_string(l) +
                      ", m=" + std::to_string(m) + ")");
  if (!(mu > 0.0))
    throw DomainError("hydrogenic state: reduced mass must be positive");
}

cplx hydrogenic_wavefunction(const HydrogenicState &s,
                             const specfun::SphericalPoint &p) {
  s.validate();
  return specfun::hydrogenic_radial(s.n, s.l, p.r, s.bohr_radius()) *
         specfun::spherical_harmonic(s.l, s.m, p.theta, p.phi);
}

ComState ComState::ring(int L, double K_R, double K_z, double rho0,
                        double sigma) {
  ComState s;
  s.L = L;
  s.K_R = K_R;
  s.K_z = K_z;
  s.profile = RadialProfile::ring_gaussian;
  s.rho0 = rho0;
  s.sigma = sigma;
  s.validate();
  return s;
}

ComState ComState::bessel(int L, double K_R, double K_z, double r_max) {
  ComState s;
  s.L = L;
  s.K_R = K_R;
  s.K_z = K_z;
  s.profile = RadialProfile::bessel;
  s.r_max = r_max;
  s.validate();
  return s;
}

double ComState::K() const { return std::hypot(K_R, K_z); }

void ComState::validate() const {
  if (!(K_R >= 0.0) || !std::isfinite(K_z))
    throw DomainError("com state: K_R must be >= 0 and K_z finite");
  if (profile == RadialProfile::ring_gaussian) {
    if (!(rho0 >= 0.0) || !(sigma > 0.0))
      throw DomainError("com state: ring profile needs rho0 >= 0, sigma > 0");
  } else {
    if (!(K_R > 0.0) || !(r_max > 0.0))
      throw DomainError("com state: bessel profile needs K_R > 0, r_max > 0");
  }
}

cplx ComState::radial(double rho) const {
  if (profile == RadialProfile::ring_gaussian) {
    const double norm = 1.0 / std::sqrt(2.0 * kPi * ring_gaussian_moment(rho0, sigma));
    const double d = rho - rho0;
    return std::polar(norm * std::exp(-d * d / (4.0 * sigma * sigma)), K_R * rho);
  }
  if (rho > r_max)
    return 0.0;
  const double norm = 1.0 / std::sqrt(2.0 * kPi * bessel_disc_moment(L, K_R, r_max));
  return norm * specfun::bessel_j(L, K_R * rho);
}

double ComState::support() const {
  if (profile == RadialProfile::ring_gaussian)
    return rho0 + 20.0 * sigma;
  return r_max;
}

cplx com_wavefunction(const ComState &s, const beams::CylindricalPoint &p) {
  return s.radial(p.rho) * std::polar(1.0, s.K_z * p.z + s.L * p.phi);
}

int two_j(Shell s) {
  switch (s) {
  case Shell::p_half: return 1;
  case Shell::p_threehalf: return 3;
  case Shell::d_threehalf: return 3;
  case Shell::d_fivehalf: return 5;
  }
  return 0;
}

int orbital_l(Shell s) {
  return (s == Shell::p_half || s == Shell::p_threehalf) ? 1 : 2;
}

std::string shell_name(Shell s) {
  switch (s) {
  case Shell::p_half: return "2p1/2";
  case Shell::p_threehalf: return "2p3/2";
  case Shell::d_threehalf: return "3d3/2";
  case Shell::d_fivehalf: return "3d5/2";
  }
  return "?";
}

Shell parse_shell(const std::string &name) {
  for (Shell s : {Shell::p_half, Shell::p_threehalf, Shell::d_threehalf,
                  Shell::d_fivehalf})
    if (shell_name(s) == name)
      return s;
  throw ConfigError("unknown shell '" + name + "'");
}

void CoreState::validate() const {
  const int tj = two_j(shell);
  if (std::abs(two_mj) > tj || (tj - two_mj) % 2 != 0)
    throw DomainError("core state: m_j out of range for " + shell_name(shell));
}

std::vector<CoreState> enumerate_core_states(Shell shell) {
  std::vector<CoreState> out;
  const int tj = two_j(shell);
  for (int tm = -tj; tm <= tj; tm += 2)
    out.push_back({shell, tm});
  return out;
}

void PhotonOccupation::validate() const {
  if (n < 0)
    throw DomainError("photon occupation must be non-negative");
}

} // namespace vortex::matter
