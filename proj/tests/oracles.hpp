#pragma once

// Independent brute-force oracles shared by the unit and acceptance tests.
// They use explicit closed-form wavefunctions and Clebsch-Gordan
// coefficients so that no code path is shared with the library's
// Gaunt/3-j machinery.

#include "vortex/quadrature.hpp"
#include "vortex/specfun.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

// 1s and 2p hydrogen orbitals (a = 1), Condon-Shortley phase.
inline cplx psi_1s(double r) { return std::exp(-r) / std::sqrt(kPi); }

inline cplx psi_2p(int m, double r, double t, double p) {
  const double rad = r * std::exp(-0.5 * r);
  if (m == 0)
    return rad * std::cos(t) / (4.0 * std::sqrt(2.0 * kPi));
  return (m > 0 ? -1.0 : 1.0) * rad * std::sin(t) * std::polar(1.0, m * p) / (8.0 * std::sqrt(kPi));
}

struct Spherical {
  cplx plus, minus, z;
};

//! <2p m| (x+iy)/2, (x-iy)/2, z |1s> by 3-D adaptive cubature in
//! Cartesian-component form.
inline Spherical dipole_1s_2p(int m) {
  auto run = [m](int which) {
    return vortex::quad::integrate_nd(
               [=](std::span<const double> v) {
                 const double r = v[0], t = v[1], p = v[2];
                 const double x = r * std::sin(t) * std::cos(p);
                 const double y = r * std::sin(t) * std::sin(p);
                 const double z = r * std::cos(t);
                 const cplx op = which == 0   ? cplx(x, y) / 2.0
                                 : which == 1 ? cplx(x, -y) / 2.0
                                              : cplx(z);
                 return std::conj(psi_2p(m, r, t, p)) * op * psi_1s(r) * r * r * std::sin(t);
               },
               {{0.0, 60.0}, {0.0, kPi}, {0.0, 2 * kPi}}, {1e-12, 1e-10, 30})
        .value;
  };
  return {run(0), run(1), run(2)};
}

//! Clebsch-Gordan <l, m - ms; 1/2, ms | j m> for j = l +- 1/2 (doubled m, ms).
inline double cg_half(int l, int two_j, int two_m, int two_ms) {
  const double m = 0.5 * two_m;
  const double d = 2.0 * l + 1.0;
  if (two_j == 2 * l + 1)
    return two_ms > 0 ? std::sqrt((l + m + 0.5) / d) : std::sqrt((l - m + 0.5) / d);
  return two_ms > 0 ? -std::sqrt((l - m + 0.5) / d) : std::sqrt((l + m + 0.5) / d);
}

//! <l' j' m'| Y_1^q |l j m> for spin-1/2 spinor harmonics, angular parts by
//! cubature over the sphere.
inline cplx spinor_element(int lf, int two_jf, int two_mf, int li, int two_ji, int two_mi, int q) {
  cplx total = 0.0;
  for (int two_ms : {-1, 1}) {
    const int mf = (two_mf - two_ms) / 2, mi = (two_mi - two_ms) / 2;
    if (std::abs(mf) > lf || std::abs(mi) > li)
      continue;
    const double cg = cg_half(lf, two_jf, two_mf, two_ms) * cg_half(li, two_ji, two_mi, two_ms);
    constexpr int nphi = 24;
    const auto ang = vortex::quad::integrate_1d(
        [=](double t) {
          cplx s = 0.0;
          for (int k = 0; k < nphi; ++k) {
            const double p = (k + 0.5) * 2 * kPi / nphi;
            s += std::conj(vortex::specfun::spherical_harmonic(lf, mf, t, p)) *
                 vortex::specfun::spherical_harmonic(1, q, t, p) *
                 vortex::specfun::spherical_harmonic(li, mi, t, p);
          }
          return s * (2 * kPi / nphi) * std::sin(t);
        },
        0.0, kPi, {1e-14, 1e-12, 40});
    total += cg * ang.value;
  }
  return total;
}

} // namespace oracle
