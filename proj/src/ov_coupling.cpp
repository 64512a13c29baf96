#include "vortex/ov_coupling.hpp"
#include "vortex/errors.hpp"
#include "vortex/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vortex::ov {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
  if (std::abs(x) < 1e-8)
    return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

} // namespace

DipoleMatrixElement dipole_matrix_element(const matter::HydrogenicState &initial,
                                          const matter::HydrogenicState &final_state) {
  initial.validate();
  final_state.validate();
  if (initial.mu != final_state.mu)
    throw DomainError("dipole_matrix_element: states belong to different systems");

  DipoleMatrixElement out;
  if (std::abs(initial.l - final_state.l) != 1)
    return out;
  const int dm = final_state.m - initial.m;
  if (std::abs(dm) > 1)
    return out;

  // (q_x + i q_y)/2 = -sqrt(2pi/3) q Y_1^1, (q_x - i q_y)/2 = sqrt(2pi/3) q Y_1^-1,
  // q_z = sqrt(4pi/3) q Y_1^0
  const double angular = specfun::gaunt(final_state.l, final_state.m, 1, dm,
                                        initial.l, initial.m);
  if (angular == 0.0)
    return out;

  const double a = initial.bohr_radius();
  const auto radial = quad::integrate_semi_infinite(
      [&](double r) {
        return quad::cplx(specfun::hydrogenic_radial(final_state.n, final_state.l, r, a) *
                          specfun::hydrogenic_radial(initial.n, initial.l, r, a) *
                          r * r * r);
      },
      0.0, {1e-14, 1e-13, 50});
  const double rad = radial.value.real();

  const double c1 = std::sqrt(2.0 * kPi / 3.0);
  switch (dm) {
  case 1: out.plus = -c1 * rad * angular; break;
  case -1: out.minus = c1 * rad * angular; break;
  default: out.z = std::sqrt(4.0 * kPi / 3.0) * rad * angular; break;
  }
  return out;
}

double azimuthal_delta(int winding_sum) {
  return winding_sum == 0 ? 2.0 * kPi : 0.0;
}

quad::IntegrationResult radial_overlap(const matter::ComState &com_i,
                                       const matter::ComState &com_f, int l,
                                       double k_perp,
                                       const quad::Tolerance &tol) {
  const double upper = std::min(com_i.support(), com_f.support());
  return quad::integrate_1d(
      [&](double rho) {
        return std::conj(com_f.radial(rho)) *
               specfun::bessel_j(l, k_perp * rho) * com_i.radial(rho) * rho;
      },
      0.0, upper, tol);
}

OvTransitionAmplitude ov_com_photon_factor(const beams::VortexBeam &beam,
                                           const matter::ComState &com_i,
                                           const matter::ComState &com_f,
                                           matter::PhotonOccupation n_i,
                                           matter::PhotonOccupation n_f,
                                           Channel channel,
                                           const OvSettings &settings) {
  if (beam.kind != beams::BeamKind::optical)
    throw DomainError("ov_com_photon_factor: beam kind mismatch");
  beam.validate();
  com_i.validate();
  com_f.validate();
  n_i.validate();
  n_f.validate();

  OvTransitionAmplitude out;
  out.channel = channel;
  const bool absorb = channel == Channel::absorption;
  const int sign = absorb ? 1 : -1;
  out.delta_L_satisfied = com_f.L == com_i.L + sign * beam.l;
  out.delta_n_satisfied = n_f.n == n_i.n - sign;
  out.kz_mismatch = com_f.K_z - com_i.K_z - sign * beam.k_z;

  const double lz = settings.axial_length > 0.0
                        ? settings.axial_length
                        : 2.0 * kPi / std::abs(beam.k_z);
  if (!std::isfinite(lz))
    throw DomainError("ov_com_photon_factor: axial length undefined for k_z = 0");
  out.axial_window = lz * sinc(0.5 * out.kz_mismatch * lz);

  if (!out.delta_L_satisfied || !out.delta_n_satisfied)
    return out;

  const auto overlap = radial_overlap(com_i, com_f, beam.l, beam.k_perp, settings.tol);
  out.radial_overlap = overlap.value;
  out.error_estimate = overlap.error_estimate;
  out.converged = overlap.converged;

  // A = (-i/omega) E for absorption; the conjugate mode carries +i/omega
  const cplx mode(0.0, -sign * beam.amplitude / beam.omega);
  const double photon = std::sqrt(absorb ? double(n_i.n) : double(n_i.n + 1));
  const double azimuthal = azimuthal_delta(com_i.L + sign * beam.l - com_f.L);
  out.amplitude = mode * photon * azimuthal * out.radial_overlap * out.axial_window;
  return out;
}

OvMatrixElement ov_matrix_element(const beams::VortexBeam &beam,
                                  const matter::HydrogenicState &internal_i,
                                  const matter::HydrogenicState &internal_f,
                                  const matter::ComState &com_i,
                                  const matter::ComState &com_f,
                                  matter::PhotonOccupation n_i,
                                  matter::PhotonOccupation n_f,
                                  const OvSettings &settings) {
  OvMatrixElement out;
  out.dipole = dipole_matrix_element(internal_i, internal_f);
  out.projected_dipole = out.dipole.project(beam.polarization);
  out.prefactor = cplx(0.0, internal_i.mu * (internal_f.energy() - internal_i.energy()));

  const int dn = n_f.n - n_i.n;
  const Channel channel = dn == 1 ? Channel::emission : Channel::absorption;
  out.com_photon = ov_com_photon_factor(beam, com_i, com_f, n_i, n_f, channel, settings);
  out.converged = out.com_photon.converged;
  if (out.projected_dipole == cplx(0.0) || out.prefactor == cplx(0.0))
    return out;
  out.value = out.prefactor * out.projected_dipole * out.com_photon.amplitude;
  return out;
}

} // namespace vortex::ov
