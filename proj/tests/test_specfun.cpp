#include "doctest.h"

#include "vortex/errors.hpp"
#include "vortex/quadrature.hpp"
#include "vortex/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace vortex;
using specfun::bessel_j;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Ascending series for J_0, summed in long double. Good for x < 5.
double j0_series(double x) {
  long double term = 1.0L, sum = 1.0L;
  const long double q = -0.25L * x * x;
  for (int k = 1; k < 60; ++k) {
    term *= q / (static_cast<long double>(k) * k);
    sum += term;
  }
  return static_cast<double>(sum);
}

} // namespace

TEST_SUITE("specfun") {

TEST_CASE("bessel values at the origin") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  for (int l : {1, 2, 5, -1, -3})
    CHECK(bessel_j(l, 0.0) == 0.0);
}

TEST_CASE("first zero of J0 located by bisection on the series") {
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (j0_series(lo) * j0_series(mid) <= 0.0 ? hi : lo) = mid;
  }
  CHECK(std::abs(0.5 * (lo + hi) - 2.404825557695773) < 1e-14);
  CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-10);
}

TEST_CASE("bessel agrees with the standard library for moderate x") {
  double worst = 0.0;
  for (int l = 0; l <= 30; ++l)
    for (double x = 0.05; x < 50.0; x *= 1.17) {
      const double ref = std::cyl_bessel_j(static_cast<double>(l), x);
      if (std::abs(ref) < 1e-200)
        continue;
      worst = std::max(worst, std::abs(bessel_j(l, x) - ref) / std::max(std::abs(ref), 1e-3));
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("bessel at large argument against high-precision values") {
  // 30-digit reference values from an arbitrary-precision library
  struct Ref {
    int l;
    double x, value;
  };
  const Ref refs[] = {
      {0, 50.0, 0.0558123276692518150047504785294},
      {0, 100.0, 0.0199858503042231224242283909508},
      {0, 333.3, 0.0384666544167186748016143297113},
      {0, 999.0, 0.0173692963551941318474817718906},
      {39, 999.0, 0.00127803116270967869085679586425},
  };
  for (const auto &r : refs) {
    CAPTURE(r.l);
    CAPTURE(r.x);
    CHECK(std::abs(bessel_j(r.l, r.x) - r.value) <= 1e-12 * std::abs(r.value));
  }
}

TEST_CASE("bessel rejects non-finite arguments") {
  CHECK_THROWS_AS(bessel_j(0, std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(bessel_j(1, std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("associated legendre") {
  CHECK(specfun::assoc_legendre(0, 0, 0.3) == 1.0);
  for (double x : {-0.9, -0.2, 0.0, 0.4, 1.0})
    CHECK(specfun::assoc_legendre(1, 0, x) == doctest::Approx(x).epsilon(1e-15));
  const double x = 0.5;
  CHECK(std::abs(specfun::assoc_legendre(2, 1, x) + 3.0 * x * std::sqrt(1.0 - x * x)) < 1e-14);
  // P_3^2(x) = 15 x (1 - x^2)
  CHECK(std::abs(specfun::assoc_legendre(3, 2, 0.3) - 15.0 * 0.3 * 0.91) < 1e-13);
  CHECK_THROWS_AS(specfun::assoc_legendre(2, 0, 1.5), DomainError);
  CHECK_THROWS_AS(specfun::assoc_legendre(1, 2, 0.5), DomainError);
}

TEST_CASE("legendre stays finite and accurate at high degree") {
  // P_50(x) via the Bonnet recurrence in long double
  const double x = 0.37;
  long double p0 = 1.0L, p1 = x;
  for (int n = 1; n < 50; ++n) {
    const long double p2 = ((2 * n + 1) * x * p1 - n * p0) / (n + 1);
    p0 = p1;
    p1 = p2;
  }
  CHECK(std::abs(specfun::assoc_legendre(50, 0, x) - static_cast<double>(p1)) < 1e-13);
}

TEST_CASE("spherical harmonics") {
  CHECK(std::abs(specfun::spherical_harmonic(0, 0, 0.7, 2.1) - 1.0 / std::sqrt(4.0 * kPi)) < 1e-15);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2.0 * kPi);
  double cs = 0.0, il = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t = th(rng), p = ph(rng);
    for (int l = 0; l <= 6; ++l) {
      const cplx phase = std::pow(cplx(0.0, 1.0), l);
      for (int m = -l; m <= l; ++m) {
        const cplx ylm = specfun::spherical_harmonic(l, m, t, p);
        const cplx yneg = specfun::spherical_harmonic(l, -m, t, p);
        cs = std::max(cs, std::abs((m % 2 ? -1.0 : 1.0) * yneg - std::conj(ylm)));
        // (-1)^{l-m} Y^{-m} = conj(Y^m) in the i^l-phased convention
        il = std::max(il, std::abs(((l - m) % 2 ? -1.0 : 1.0) * phase * yneg -
                                   std::conj(phase * ylm)));
      }
    }
  }
  CHECK(cs < 1e-12);
  CHECK(il < 1e-12);
}

TEST_CASE("normalisation of Y_2^1 by cubature") {
  constexpr int nphi = 16;
  const auto r = quad::integrate_1d(
      [](double t) {
        double s = 0.0;
        for (int k = 0; k < nphi; ++k)
          s += std::norm(specfun::spherical_harmonic(2, 1, t, (k + 0.5) * 2 * kPi / nphi));
        return cplx(s * 2 * kPi / nphi * std::sin(t));
      },
      0.0, kPi, {1e-12, 1e-12, 40});
  CHECK(std::abs(r.value.real() - 1.0) < 1e-8);
}

TEST_CASE("hydrogenic radial functions") {
  auto overlap = [](int n1, int n2, int l) {
    return quad::integrate_semi_infinite(
               [=](double q) {
                 return cplx(specfun::hydrogenic_radial(n1, l, q) *
                             specfun::hydrogenic_radial(n2, l, q) * q * q);
               },
               0.0, {1e-13, 1e-11, 50})
        .value.real();
  };
  CHECK(std::abs(overlap(1, 1, 0) - 1.0) < 1e-8);
  CHECK(std::abs(overlap(2, 3, 0)) < 1e-8);
  CHECK(specfun::hydrogenic_radial(2, 1, 0.0) == 0.0);
  // closed forms: R_10 = 2 e^{-q}, R_21 = q e^{-q/2} / (2 sqrt 6)
  for (double q : {0.1, 1.0, 4.5}) {
    CHECK(specfun::hydrogenic_radial(1, 0, q) == doctest::Approx(2.0 * std::exp(-q)).epsilon(1e-14));
    CHECK(specfun::hydrogenic_radial(2, 1, q) ==
          doctest::Approx(q * std::exp(-q / 2) / (2.0 * std::sqrt(6.0))).epsilon(1e-14));
  }
  // reduced-mass scaling: R(q; a) = a^{-3/2} R(q/a; 1)
  const double a = 1.0 / 0.9995;
  CHECK(specfun::hydrogenic_radial(3, 1, 2.0, a) ==
        doctest::Approx(std::pow(a, -1.5) * specfun::hydrogenic_radial(3, 1, 2.0 / a)).epsilon(1e-13));
  CHECK_THROWS_AS(specfun::hydrogenic_radial(2, 2, 1.0), DomainError);
}

TEST_CASE("wigner 3j reference values") {
  using specfun::AngularMomentum;
  CHECK(specfun::wigner_3j(1, 1, 0, 0, 0, 0) == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(specfun::wigner_3j(1, 1, 1, 1, 1, 1) == 0.0);
  CHECK(specfun::wigner_3j(1, 1, 3, 0, 0, 0) == 0.0);
  // exact rational values, evaluated to 20 digits
  CHECK(specfun::wigner_3j(2, 1, 1, 0, 0, 0) == doctest::Approx(0.36514837167011074230).epsilon(1e-13));
  CHECK(specfun::wigner_3j(3, 2, 1, 1, -1, 0) == doctest::Approx(0.27602622373694168712).epsilon(1e-13));
  CHECK(specfun::wigner_3j(4, 3, 2, -2, 1, 1) == doctest::Approx(0.062994078834871204536).epsilon(1e-13));
  CHECK(specfun::wigner_3j({3, -1}, {2, 2}, {1, -1}) ==
        doctest::Approx(-0.28867513459481288225).epsilon(1e-13));
  CHECK(specfun::wigner_3j({5, -5}, {2, 2}, {3, 3}) ==
        doctest::Approx(0.40824829046386301637).epsilon(1e-13));
  CHECK(specfun::wigner_3j({5, 1}, {3, -1}, {2, 0}) ==
        doctest::Approx(0.31622776601683793320).epsilon(1e-13));
  CHECK_THROWS_AS(specfun::wigner_3j({2, 1}, {2, 0}, {2, -1}), DomainError);
}

TEST_CASE("wigner 3j closed form (j j 0; m -m 0)") {
  for (int tj = 0; tj <= 12; ++tj)
    for (int tm = -tj; tm <= tj; tm += 2) {
      const double sign = ((tj - tm) / 2) % 2 ? -1.0 : 1.0;
      CHECK(specfun::wigner_3j({tj, tm}, {tj, -tm}, {0, 0}) ==
            doctest::Approx(sign / std::sqrt(tj + 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("wigner 3j column swap sign on random inputs") {
  std::mt19937_64 rng(11);
  int tested = 0;
  while (tested < 200) {
    const int tj1 = rng() % 9, tj2 = rng() % 9;
    const int lo = std::abs(tj1 - tj2), hi = tj1 + tj2;
    const int tj3 = lo + 2 * static_cast<int>(rng() % (1 + (hi - lo) / 2));
    const int tm1 = -tj1 + 2 * static_cast<int>(rng() % (tj1 + 1));
    const int tm2 = -tj2 + 2 * static_cast<int>(rng() % (tj2 + 1));
    const int tm3 = -tm1 - tm2;
    if (std::abs(tm3) > tj3)
      continue;
    ++tested;
    const double a = specfun::wigner_3j({tj1, tm1}, {tj2, tm2}, {tj3, tm3});
    const double b = specfun::wigner_3j({tj2, tm2}, {tj1, tm1}, {tj3, tm3});
    const double sign = ((tj1 + tj2 + tj3) / 2) % 2 ? -1.0 : 1.0;
    CHECK(std::abs(b - sign * a) < 1e-14);
  }
}

TEST_CASE("gaunt coefficient against cubature") {
  constexpr int nphi = 16;
  const auto r = quad::integrate_1d(
      [](double t) {
        cplx s = 0.0;
        for (int k = 0; k < nphi; ++k) {
          const double p = (k + 0.5) * 2 * kPi / nphi;
          s += std::conj(specfun::spherical_harmonic(2, 1, t, p)) *
               specfun::spherical_harmonic(1, 1, t, p) * specfun::spherical_harmonic(1, 0, t, p);
        }
        return s * (2 * kPi / nphi) * std::sin(t);
      },
      0.0, kPi, {1e-14, 1e-12, 40});
  CHECK(std::abs(specfun::gaunt(2, 1, 1, 1, 1, 0) - r.value.real()) < 1e-12);
  CHECK(std::abs(r.value.imag()) < 1e-13);
}

} // TEST_SUITE
