#include "vortex/specfun.hpp"
#include "vortex/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace vortex::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Above this argument (and for order < x) J_n is built from the Hankel
// asymptotic J_0, J_1 followed by upward recurrence. Below it, Miller's
// downward recurrence normalised by J_0 + 2 sum J_2k = 1 is used. At x = 25
// the smallest asymptotic term is ~exp(-50), well past double precision.
constexpr double kAsymptoticCutoff = 25.0;

// Hankel expansion for J_nu, nu in {0,1}. The phase is formed from cos(x),
// sin(x) directly so that no rounding is introduced by x - (nu/2+1/4)pi.
double bessel_j_hankel(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(term) > last)
      break; // asymptotic series starts diverging
    last = std::abs(term);
    // a_k / x^k with alternating sign pattern (+,-) on even/odd pairs
    switch (k % 4) {
    case 1: q += term; break;
    case 2: p -= term; break;
    case 3: q -= term; break;
    case 0: p += term; break;
    }
    if (last < 1e-17 * std::abs(p))
      break;
  }
  // chi = x - (nu/2 + 1/4) pi
  const double c = std::cos(x), s = std::sin(x);
  const double r = std::numbers::sqrt2 / 2.0;
  double cos_chi, sin_chi;
  if (nu == 0) {
    cos_chi = r * (c + s);
    sin_chi = r * (s - c);
  } else {
    cos_chi = r * (s - c);
    sin_chi = -r * (c + s);
  }
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

double bessel_j_miller(int n, double x) {
  const double big = std::max<double>(n, x);
  int start = static_cast<int>(big + 15.0 * std::cbrt(big) + 20.0);
  start += start % 2;
  double jp1 = 0.0, j = 1e-300, result = 0.0, sum = 0.0;
  const double two_over_x = 2.0 / x;
  for (int k = start; k > 0; --k) {
    const double jm1 = k * two_over_x * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      result *= 1e-250;
      sum *= 1e-250;
    }
    // j now holds J_{k-1}
    if ((k - 1) % 2 == 0 && k - 1 > 0)
      sum += j;
    if (k - 1 == n)
      result = j;
  }
  sum = 2.0 * sum + j;
  return result / sum;
}

double bessel_j_nonneg(int n, double x) {
  if (x == 0.0)
    return n == 0 ? 1.0 : 0.0;
  if (x <= kAsymptoticCutoff || n >= x)
    return bessel_j_miller(n, x);
  double jm = bessel_j_hankel(0, x);
  if (n == 0)
    return jm;
  double jc = bessel_j_hankel(1, x);
  for (int k = 1; k < n; ++k) {
    const double jn = (2.0 * k / x) * jc - jm;
    jm = jc;
    jc = jn;
  }
  return jc;
}

// (a)! / (b)! for a <= b as 1 / prod_{k=a+1}^{b} k
double factorial_ratio(int a, int b) {
  double r = 1.0;
  for (int k = a + 1; k <= b; ++k)
    r /= k;
  return r;
}

const std::array<long double, 171> &factorials() {
  static const auto table = [] {
    std::array<long double, 171> f{};
    f[0] = 1.0L;
    for (std::size_t i = 1; i < f.size(); ++i)
      f[i] = f[i - 1] * static_cast<long double>(i);
    return f;
  }();
  return table;
}

long double fact(int n) {
  if (n < 0 || n >= 171)
    throw DomainError("factorial argument out of range: " + std::to_string(n));
  return factorials()[static_cast<std::size_t>(n)];
}

} // namespace

bool AngularMomentum::valid() const {
  return two_j >= 0 && std::abs(two_m) <= two_j &&
         ((two_j - two_m) % 2 == 0);
}

double bessel_j(int order, double x) {
  if (!std::isfinite(x))
    throw DomainError("bessel_j: non-finite argument");
  double sign = 1.0;
  if (order < 0) {
    order = -order;
    if (order % 2)
      sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (order % 2)
      sign = -sign;
  }
  return sign * bessel_j_nonneg(order, x);
}

double assoc_legendre(int l, int m, double x) {
  if (l < 0 || std::abs(m) > l)
    throw DomainError("assoc_legendre: require 0 <= |m| <= l");
  if (!(std::abs(x) <= 1.0))
    throw DomainError("assoc_legendre: |x| > 1");
  if (m < 0) {
    const double sign = (-m) % 2 ? -1.0 : 1.0;
    return sign * factorial_ratio(l + m, l - m) * assoc_legendre(l, -m, x);
  }
  double pmm = 1.0;
  const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
  double fact_odd = 1.0;
  for (int i = 1; i <= m; ++i) {
    pmm *= -fact_odd * somx2;
    fact_odd += 2.0;
  }
  if (l == m)
    return pmm;
  double pmmp1 = x * (2 * m + 1) * pmm;
  if (l == m + 1)
    return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

std::complex<double> spherical_harmonic(int l, int m, double theta,
                                        double phi) {
  if (l < 0 || std::abs(m) > l)
    throw DomainError("spherical_harmonic: require 0 <= |m| <= l");
  const int am = std::abs(m);
  const double norm =
      std::sqrt((2 * l + 1) / (4.0 * kPi) * factorial_ratio(l - am, l + am));
  const double plm = assoc_legendre(l, am, std::cos(theta));
  const std::complex<double> y = std::polar(norm * plm, am * phi);
  if (m >= 0)
    return y;
  return (am % 2 ? -1.0 : 1.0) * std::conj(y);
}

double hydrogenic_radial(int n, int l, double q, double bohr_radius) {
  if (n < 1 || l < 0 || l >= n)
    throw DomainError("hydrogenic_radial: require 0 <= l < n, n >= 1");
  if (!(q >= 0.0) || !(bohr_radius > 0.0))
    throw DomainError("hydrogenic_radial: require q >= 0, bohr_radius > 0");
  const double scale = 2.0 / (n * bohr_radius);
  const double rho = scale * q;
  const int k = n - l - 1;
  const double alpha = 2 * l + 1;
  // generalised Laguerre L_k^{alpha}(rho)
  double lag_prev = 1.0, lag = 1.0;
  if (k >= 1)
    lag = 1.0 + alpha - rho;
  for (int i = 1; i < k; ++i) {
    const double next = ((2 * i + 1 + alpha - rho) * lag - (i + alpha) * lag_prev) / (i + 1);
    lag_prev = lag;
    lag = next;
  }
  const double norm = std::sqrt(scale * scale * scale * factorial_ratio(k, n + l) / (2.0 * n));
  return norm * std::exp(-0.5 * rho) * std::pow(rho, l) * lag;
}

double wigner_3j(AngularMomentum a, AngularMomentum b, AngularMomentum c) {
  if (!a.valid() || !b.valid() || !c.valid())
    throw DomainError("wigner_3j: inconsistent (j, m) pair");
  if (a.two_m + b.two_m + c.two_m != 0)
    return 0.0;
  const int j1 = a.two_j, j2 = b.two_j, j3 = c.two_j;
  if (j3 < std::abs(j1 - j2) || j3 > j1 + j2 || (j1 + j2 + j3) % 2)
    return 0.0;
  const int m1 = a.two_m, m2 = b.two_m, m3 = c.two_m;
  // all arguments below are integers (halved doubled values)
  const int s12 = (j1 + j2 - j3) / 2;
  const int s13 = (j1 - j2 + j3) / 2;
  const int s23 = (-j1 + j2 + j3) / 2;
  const int total = (j1 + j2 + j3) / 2;
  const long double triangle = fact(s12) * fact(s13) * fact(s23) / fact(total + 1);
  const long double mfact = fact((j1 + m1) / 2) * fact((j1 - m1) / 2) *
                            fact((j2 + m2) / 2) * fact((j2 - m2) / 2) *
                            fact((j3 + m3) / 2) * fact((j3 - m3) / 2);
  const int a1 = (j3 - j2 + m1) / 2; // j3 - j2 + t + m1 >= 0
  const int a2 = (j3 - j1 - m2) / 2; // j3 - j1 + t - m2 >= 0
  const int b1 = s12;
  const int b2 = (j1 - m1) / 2;
  const int b3 = (j2 + m2) / 2;
  const int tmin = std::max({0, -a1, -a2});
  const int tmax = std::min({b1, b2, b3});
  long double sum = 0.0L;
  for (int t = tmin; t <= tmax; ++t) {
    const long double denom = fact(t) * fact(a1 + t) * fact(a2 + t) *
                              fact(b1 - t) * fact(b2 - t) * fact(b3 - t);
    sum += (t % 2 ? -1.0L : 1.0L) / denom;
  }
  const int phase = (j1 - j2 - m3) / 2;
  const long double sign = (phase % 2) ? -1.0L : 1.0L;
  return static_cast<double>(sign * std::sqrt(triangle * mfact) * sum);
}

double wigner_3j(int j1, int j2, int j3, int m1, int m2, int m3) {
  return wigner_3j(AngularMomentum::integer(j1, m1),
                   AngularMomentum::integer(j2, m2),
                   AngularMomentum::integer(j3, m3));
}

double gaunt(int l1, int m1, int l2, int m2, int l3, int m3) {
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3)
    throw DomainError("gaunt: |m| > l");
  if (m1 != m2 + m3)
    return 0.0;
  const double pref = std::sqrt((2 * l1 + 1) * (2 * l2 + 1) * (2 * l3 + 1) / (4.0 * kPi));
  const double sign = m1 % 2 ? -1.0 : 1.0;
  return sign * pref * wigner_3j(l1, l2, l3, 0, 0, 0) *
         wigner_3j(l1, l2, l3, -m1, m2, m3);
}

} // namespace vortex::specfun
