#pragma once

#include <complex>
#include <cstdint>

namespace vortex::specfun {

//! Angular momentum quantum number pair stored doubled, so that half-integer
//! values (j = 1/2, 3/2, ...) are exact integers.
struct AngularMomentum {
  int two_j = 0;
  int two_m = 0;

  static AngularMomentum integer(int j, int m) { return {2 * j, 2 * m}; }
  //! true if |m| <= j and j, m have the same parity
  bool valid() const;
  double j() const { return 0.5 * two_j; }
  double m() const { return 0.5 * two_m; }
  bool operator==(const AngularMomentum &) const = default;
};

struct SphericalPoint {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

//! Bessel function of the first kind, J_n(x), integer order.
//! Throws DomainError for non-finite x.
double bessel_j(int order, double x);

//! Associated Legendre function P_l^m(x), Condon-Shortley phase included.
//! Negative m uses P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
double assoc_legendre(int l, int m, double x);

//! Orthonormal spherical harmonic Y_l^m(theta, phi), Condon-Shortley phase.
//! Satisfies (-1)^m Y_l^{-m} = conj(Y_l^m).
std::complex<double> spherical_harmonic(int l, int m, double theta,
                                        double phi);

//! Hydrogenic radial function R_{nl}(q) with int R^2 q^2 dq = 1.
//! `bohr_radius` is the length unit of the bound state (1/mu in atomic units).
double hydrogenic_radial(int n, int l, double q, double bohr_radius = 1.0);

//! Wigner 3-j symbol (j1 j2 j3; m1 m2 m3). Returns 0 for m1+m2+m3 != 0 or a
//! violated triangle condition; throws DomainError on inconsistent parity or
//! |m| > j.
double wigner_3j(AngularMomentum a, AngularMomentum b, AngularMomentum c);

//! Integer-argument convenience form.
double wigner_3j(int j1, int j2, int j3, int m1, int m2, int m3);

//! Gaunt coefficient int conj(Y_{l1}^{m1}) Y_{l2}^{m2} Y_{l3}^{m3} dOmega.
double gaunt(int l1, int m1, int l2, int m2, int l3, int m3);

} // namespace vortex::specfun
