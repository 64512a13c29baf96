#pragma once

#include <array>
#include <complex>

namespace vortex::beams {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<cplx, 3>;

//! Speed of light in atomic units.
inline constexpr double kSpeedOfLight = 137.035999084;

enum class BeamKind { optical, electron };

//! Bessel vortex mode. For the optical kind `amplitude` is E0 and
//! `polarization` is a real unit vector; for the electron kind `amplitude` is
//! the normalisation N and `polarization` is unused.
struct VortexBeam {
  BeamKind kind = BeamKind::electron;
  int l = 0;
  double k_perp = 1.0;
  double k_z = 1.0;
  double omega = 1.0;
  double amplitude = 1.0;
  Vec3 polarization{1.0, 0.0, 0.0};

  //! omega = c * sqrt(k_perp^2 + k_z^2)
  static VortexBeam optical(int l, double k_perp, double k_z,
                            double e0 = 1.0, Vec3 pol = {1.0, 0.0, 0.0});
  //! Non-relativistic dispersion, omega = (k_perp^2 + k_z^2) / 2.
  static VortexBeam electron(int l, double k_perp, double k_z,
                             double norm = 1.0);

  double k_squared() const { return k_perp * k_perp + k_z * k_z; }
  //! Throws DomainError if the dispersion relation or polarization is
  //! inconsistent with `kind`.
  void validate() const;
};

struct CylindricalPoint {
  double rho = 0.0;
  double phi = 0.0;
  double z = 0.0;
};

//! Scalar mode J_l(k_perp rho) e^{i k_z z} e^{i l phi} e^{-i omega t}
//! without the amplitude factor.
cplx bessel_mode(const VortexBeam &beam, const CylindricalPoint &p,
                 double t = 0.0);

CVec3 ov_field(const VortexBeam &beam, const CylindricalPoint &p, double t);
//! A = (-i / omega) E
CVec3 ov_vector_potential(const VortexBeam &beam, const CylindricalPoint &p,
                          double t);
cplx ev_wavefunction(const VortexBeam &beam, const CylindricalPoint &p,
                     double t);

//! N with 2 pi L_z int_0^{R_max} N^2 J_l^2(k_perp rho) rho drho = 1.
double ev_normalization(int l, double k_perp, double r_max, double l_z);

struct HelmholtzCheck {
  double residual = 0.0;
  //! Relative residual is meaningless (mode vanishes, or too close to the
  //! axis for the stencil).
  bool indeterminate = false;
};

/// Central-difference estimate of |(lap + k^2) psi| / |k^2 psi| using the
/// 7-point Cartesian Laplacian with step h.
HelmholtzCheck helmholtz_residual(const VortexBeam &beam,
                                  const CylindricalPoint &p, double h);

/// Numerical -i d/dphi psi / psi with a 5-point stencil of angular step
/// `step`; equals l for an exact vortex mode.
cplx oam_eigenvalue(const VortexBeam &beam, const CylindricalPoint &p,
                    double step = 1e-3);

} // namespace vortex::beams
