#pragma once

#include "vortex/beams.hpp"
#include "vortex/matter.hpp"
#include "vortex/ov_coupling.hpp"
#include "vortex/quadrature.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

namespace vortex::ev {

using cplx = std::complex<double>;

//! Default relative margin: the kernel requires F >= (1 + margin) G.
inline constexpr double kDefaultSingularMargin = 1e-3;

/// Offset/cosine pair of the Coulomb kernel denominator,
/// |r_v - R|^2 = F - G cos(phi_v - phi_R).
struct KernelFG {
  double F = 0.0;
  double G = 0.0;
};

//! Beam-electron and centre-of-mass positions in cylindrical coordinates,
//! azimuths excluded.
struct KernelGeometry {
  double rho_v = 0.0;
  double z_v = 0.0;
  double rho_r = 0.0;
  double z_r = 0.0;

  //! A geometry with the requested F, G (F > G > 0) and rho_v != rho_r where
  //! possible. Throws DomainError for F <= G.
  static KernelGeometry from_fg(double F, double G);
};

//! F = rho_v^2 + rho_R^2 + (z_v - z_R)^2, G = 2 rho_v rho_R. Throws
//! DomainError when F < (1 + margin) G, or F = 0.
KernelFG kernel_fg(double rho_v, double z_v, double rho_r, double z_r,
                   double margin = kDefaultSingularMargin);

struct YAlphaResult {
  double value = 0.0;
  //! Imaginary part returned by the quadrature; analytically zero.
  double imag = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

inline const quad::Tolerance kYAlphaTolerance{1e-15, 1e-12, 40};

/// Y(n) = int_0^{2pi} e^{i n y} (F - G cos y)^{-3/2} dy, with n the combined
/// exponent l - l' + alpha. G = 0 is evaluated in closed form.
YAlphaResult y_alpha(int n, double F, double G,
                     const quad::Tolerance &tol = kYAlphaTolerance);

/// C = kappa Y(n-1) - lambda Y(n), D = kappa Y(n+1) - lambda Y(n),
/// I = eta Y(n), with n = l - l'. In fixed mode kappa, lambda, eta are the
/// geometric weights rho_v, rho_R, z_v - z_R and the identities hold exactly.
/// In integrated mode C, D, I are integrals with the Y values evaluated inside
/// the integrand; kappa, lambda, eta then hold the Y-free moments and
/// y_minus/y_zero/y_plus are left at zero.
struct KernelCoefficients {
  cplx C{};
  cplx D{};
  cplx I{};
  cplx kappa{};
  cplx lambda{};
  cplx eta{};
  double y_minus = 0.0;
  double y_zero = 0.0;
  double y_plus = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

//! Weights at a fixed kernel geometry.
struct FixedKernel {
  double F = 2.0;
  double G = 1.0;
  double kappa = 1.0;
  double lambda = 1.0;
  double eta = 0.0;

  static FixedKernel from_geometry(const KernelGeometry &g,
                                   double margin = kDefaultSingularMargin);
};

/// Beam and centre-of-mass states integrated over the finite cylinder
/// rho in [0, r_max], z in [-l_z/2, l_z/2]. Points with
/// (rho_v - rho_R)^2 + (z_v - z_R)^2 < tube_radius^2 are excluded.
struct IntegratedKernel {
  beams::VortexBeam beam_i;
  beams::VortexBeam beam_f;
  matter::ComState com_i;
  matter::ComState com_f;
  double r_max = 20.0;
  double l_z = 6.283185307179586;
  double tube_radius = 0.1;
  //! Tolerance of each nested 1-D pass. The Y values inside the integrand
  //! come from elliptic integrals near the ring singularity and from a
  //! converged periodic trapezoid rule elsewhere.
  quad::Tolerance tol{1e-9, 1e-6, 30};
};

using GeometryMode = std::variant<FixedKernel, IntegratedKernel>;

//! `tol` governs the Y quadratures of fixed mode; integrated mode uses its own.
KernelCoefficients kernel_coefficients(int l, int l_prime,
                                       const GeometryMode &mode,
                                       const quad::Tolerance &tol = kYAlphaTolerance);

enum class EvChannel { plus, minus, zero, none };
std::string channel_name(EvChannel c);

struct EvTransitionAmplitude {
  cplx Q{};
  cplx S{};
  cplx U{};
  EvChannel active_channel = EvChannel::none;
  KernelCoefficients kernel;
  ov::DipoleMatrixElement dipole;

  cplx total() const { return Q + S + U; }
};

/// Q = C <(q_x+iq_y)/2> when L + l = L' + l' + 1 and m' = m + 1,
/// S = D <(q_x-iq_y)/2> when L + l = L' + l' - 1 and m' = m - 1,
/// U = I <q_z>          when L + l = L' + l'     and m' = m.
/// Atomic units, so e^2 / (4 pi eps0) = 1.
EvTransitionAmplitude ev_matrix_element(const beams::VortexBeam &beam_i,
                                        const beams::VortexBeam &beam_f,
                                        const matter::HydrogenicState &internal_i,
                                        const matter::HydrogenicState &internal_f,
                                        const matter::ComState &com_i,
                                        const matter::ComState &com_f,
                                        const GeometryMode &mode,
                                        const quad::Tolerance &tol = kYAlphaTolerance);

enum class KernelComponent { plus, minus, z };

/// Brute-force midpoint integration over (phi_v, phi_R) of one Cartesian
/// component of (r_v - R)/|r_v - R|^3 times e^{i(l-l')phi_v} e^{i(L-L')phi_R}.
/// plus is the coefficient of (x+iy)/2, i.e. V_x - i V_y; minus is V_x + i V_y.
/// No analytic delta is used and |r_v - R| is computed in Cartesian form.
cplx angular_oracle(int l, int l_prime, int L, int L_prime,
                    KernelComponent component, const KernelGeometry &geometry,
                    int n_panels);

} // namespace vortex::ev
