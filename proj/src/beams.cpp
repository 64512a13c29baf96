#include "vortex/beams.hpp"
#include "vortex/errors.hpp"
#include "vortex/quadrature.hpp"
#include "vortex/specfun.hpp"

#include <cmath>
#include <numbers>

namespace vortex::beams {

namespace {

void require_kind(const VortexBeam &beam, BeamKind kind, const char *op) {
  if (beam.kind != kind)
    throw DomainError(std::string(op) + ": beam kind mismatch");
}

cplx phase(double angle) { return std::polar(1.0, angle); }

} // namespace

VortexBeam VortexBeam::optical(int l, double k_perp, double k_z, double e0,
                               Vec3 pol) {
  VortexBeam b;
  b.kind = BeamKind::optical;
  b.l = l;
  b.k_perp = k_perp;
  b.k_z = k_z;
  b.omega = kSpeedOfLight * std::sqrt(k_perp * k_perp + k_z * k_z);
  b.amplitude = e0;
  b.polarization = pol;
  b.validate();
  return b;
}

VortexBeam VortexBeam::electron(int l, double k_perp, double k_z,
                                double norm) {
  VortexBeam b;
  b.kind = BeamKind::electron;
  b.l = l;
  b.k_perp = k_perp;
  b.k_z = k_z;
  b.omega = 0.5 * (k_perp * k_perp + k_z * k_z);
  b.amplitude = norm;
  b.validate();
  return b;
}

void VortexBeam::validate() const {
  if (!(k_perp > 0.0) || !std::isfinite(k_perp) || !std::isfinite(k_z))
    throw DomainError("beam: k_perp must be positive and finite");
  if (!(omega > 0.0))
    throw DomainError("beam: omega must be positive");
  const double expected = kind == BeamKind::optical
                              ? kSpeedOfLight * std::sqrt(k_squared())
                              : 0.5 * k_squared();
  if (std::abs(omega - expected) > 1e-9 * expected)
    throw DomainError("beam: omega inconsistent with the dispersion relation");
  if (kind == BeamKind::optical) {
    const double norm2 = polarization[0] * polarization[0] +
                         polarization[1] * polarization[1] +
                         polarization[2] * polarization[2];
    if (std::abs(norm2 - 1.0) > 1e-12)
      throw DomainError("beam: polarization must be a unit vector");
  }
}

cplx bessel_mode(const VortexBeam &beam, const CylindricalPoint &p, double t) {
  return specfun::bessel_j(beam.l, beam.k_perp * p.rho) *
         phase(beam.k_z * p.z + beam.l * p.phi - beam.omega * t);
}

CVec3 ov_field(const VortexBeam &beam, const CylindricalPoint &p, double t) {
  require_kind(beam, BeamKind::optical, "ov_field");
  const cplx s = beam.amplitude * bessel_mode(beam, p, t);
  return {s * beam.polarization[0], s * beam.polarization[1],
          s * beam.polarization[2]};
}

CVec3 ov_vector_potential(const VortexBeam &beam, const CylindricalPoint &p,
                          double t) {
  CVec3 e = ov_field(beam, p, t);
  const cplx factor(0.0, -1.0 / beam.omega);
  for (auto &c : e)
    c *= factor;
  return e;
}

cplx ev_wavefunction(const VortexBeam &beam, const CylindricalPoint &p,
                     double t) {
  require_kind(beam, BeamKind::electron, "ev_wavefunction");
  return beam.amplitude * bessel_mode(beam, p, t);
}

double ev_normalization(int l, double k_perp, double r_max, double l_z) {
  if (!(r_max > 0.0) || !(l_z > 0.0) || !(k_perp > 0.0))
    throw DomainError("ev_normalization: degenerate normalisation volume");
  const auto r = quad::integrate_1d(
      [&](double rho) {
        const double j = specfun::bessel_j(l, k_perp * rho);
        return quad::cplx(j * j * rho);
      },
      0.0, r_max, {1e-14, 1e-12, 40});
  const double radial = r.value.real();
  if (!(radial > 0.0))
    throw DomainError("ev_normalization: vanishing radial integral");
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * l_z * radial);
}

HelmholtzCheck helmholtz_residual(const VortexBeam &beam,
                                  const CylindricalPoint &p, double h) {
  if (!(h > 0.0))
    throw DomainError("helmholtz_residual: step must be positive");
  HelmholtzCheck out;
  const double x = p.rho * std::cos(p.phi);
  const double y = p.rho * std::sin(p.phi);
  auto psi = [&](double xx, double yy, double zz) {
    return bessel_mode(beam, {std::hypot(xx, yy), std::atan2(yy, xx), zz});
  };
  const cplx centre = psi(x, y, p.z);
  if ((beam.l != 0 && p.rho < 10.0 * h) || std::abs(centre) == 0.0) {
    out.indeterminate = true;
    return out;
  }
  const cplx lap = (psi(x + h, y, p.z) + psi(x - h, y, p.z) +
                    psi(x, y + h, p.z) + psi(x, y - h, p.z) +
                    psi(x, y, p.z + h) + psi(x, y, p.z - h) - 6.0 * centre) /
                   (h * h);
  const double k2 = beam.k_squared();
  out.residual = std::abs(lap + k2 * centre) / std::abs(k2 * centre);
  return out;
}

cplx oam_eigenvalue(const VortexBeam &beam, const CylindricalPoint &p,
                    double step) {
  auto at = [&](double dphi) {
    return bessel_mode(beam, {p.rho, p.phi + dphi, p.z});
  };
  const cplx centre = at(0.0);
  if (std::abs(centre) == 0.0)
    throw DomainError("oam_eigenvalue: mode vanishes at the sample point");
  const cplx deriv = (-at(2.0 * step) + 8.0 * at(step) - 8.0 * at(-step) +
                      at(-2.0 * step)) /
                     (12.0 * step);
  return cplx(0.0, -1.0) * deriv / centre;
}

} // namespace vortex::beams
