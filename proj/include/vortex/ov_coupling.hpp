#pragma once

#include "vortex/beams.hpp"
#include "vortex/matter.hpp"
#include "vortex/quadrature.hpp"

#include <complex>

namespace vortex::ov {

using cplx = std::complex<double>;

/// Spherical components of the internal dipole matrix element <f|q|i>:
/// plus = <(q_x + i q_y)/2>, minus = <(q_x - i q_y)/2>, z = <q_z>.
/// plus is nonzero only for m' = m + 1, minus only for m' = m - 1, z only
/// for m' = m, and all vanish unless |l - l'| = 1.
struct DipoleMatrixElement {
  cplx plus{};
  cplx minus{};
  cplx z{};

  cplx x() const { return plus + minus; }
  cplx y() const { return cplx(0.0, -1.0) * (plus - minus); }
  //! e . <q> for a real polarization vector
  cplx project(const beams::Vec3 &e) const {
    return e[0] * x() + e[1] * y() + e[2] * z;
  }
};

//! Radial quadrature times analytic Gaunt angular factors. Forbidden
//! combinations return exact zeros without touching the quadrature.
DipoleMatrixElement dipole_matrix_element(const matter::HydrogenicState &initial,
                                          const matter::HydrogenicState &final_state);

//! int_0^{2 pi} e^{i k phi} dphi evaluated analytically: 2 pi if k = 0.
double azimuthal_delta(int winding_sum);

enum class Channel { absorption, emission };

struct OvSettings {
  //! Axial length L_z of the window replacing the K_z delta function.
  //! Non-positive means "use 2 pi / k_z".
  double axial_length = 0.0;
  quad::Tolerance tol{1e-13, 1e-10, 40};
};

/// Centre-of-mass and photon factor of the optical-vortex matrix element:
///   (+-i E0/omega) * photon * 2pi delta_L * radial overlap * axial window
/// where photon = sqrt(n_i) for absorption and sqrt(n_i + 1) for emission,
/// the radial overlap is int conj(R_f) J_l(k_perp rho) R_i rho drho and the
/// axial window is L_z sinc(dK_z L_z / 2).
struct OvTransitionAmplitude {
  cplx amplitude{};
  Channel channel = Channel::absorption;
  bool delta_L_satisfied = false;
  bool delta_n_satisfied = false;
  double kz_mismatch = 0.0;
  cplx radial_overlap{};
  double axial_window = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

OvTransitionAmplitude ov_com_photon_factor(const beams::VortexBeam &beam,
                                           const matter::ComState &com_i,
                                           const matter::ComState &com_f,
                                           matter::PhotonOccupation n_i,
                                           matter::PhotonOccupation n_f,
                                           Channel channel,
                                           const OvSettings &settings = {});

//! int conj(R_f) J_l(k_perp rho) R_i rho drho by adaptive quadrature.
quad::IntegrationResult radial_overlap(const matter::ComState &com_i,
                                       const matter::ComState &com_f, int l,
                                       double k_perp,
                                       const quad::Tolerance &tol);

struct OvMatrixElement {
  cplx value{};
  DipoleMatrixElement dipole;
  //! e . <d>
  cplx projected_dipole{};
  //! i mu (W_f - W_i)
  cplx prefactor{};
  //! Factor of the channel selected by the photon-number change; if the
  //! photon number changes by neither -1 nor +1 both delta flags are false.
  OvTransitionAmplitude com_photon;
  bool converged = true;
};

OvMatrixElement ov_matrix_element(const beams::VortexBeam &beam,
                                  const matter::HydrogenicState &internal_i,
                                  const matter::HydrogenicState &internal_f,
                                  const matter::ComState &com_i,
                                  const matter::ComState &com_f,
                                  matter::PhotonOccupation n_i,
                                  matter::PhotonOccupation n_f,
                                  const OvSettings &settings = {});

} // namespace vortex::ov
