#include "vortex/verify.hpp"

#include "vortex/beams.hpp"
#include "vortex/errors.hpp"
#include "vortex/ev_coupling.hpp"
#include "vortex/ledge.hpp"
#include "vortex/matter.hpp"
#include "vortex/ov_coupling.hpp"
#include "vortex/quadrature.hpp"
#include "vortex/records.hpp"
#include "vortex/specfun.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>

namespace vortex::cli {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 0x5eed2011;

std::string fmt(const char *f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

PropertyCheck worst(const char *module, const char *name, double value, double bound) {
  return {module, name, value <= bound, fmt("worst %.3e (bound %.1e)", value, bound)};
}

struct Sampler {
  std::mt19937_64 rng{kSeed};
  // Uses raw engine output so the stream does not depend on the library's
  // distribution implementations.
  double uniform(double a, double b) {
    return a + (b - a) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  }
};

// ---------------------------------------------------------------- specfun

PropertyCheck bessel_reflection(Sampler &s) {
  double w = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = s.uniform(0.1, 60.0);
    const int l = 1 + i % 30;
    const double jp = specfun::bessel_j(l, x);
    const double jm = specfun::bessel_j(-l, x);
    w = std::max(w, std::abs(jm - (l % 2 ? -jp : jp)) / std::max(1.0, std::abs(jp)));
  }
  return worst("specfun", "bessel_negative_order_reflection", w, 1e-15);
}

PropertyCheck bessel_recurrence(Sampler &s) {
  double w = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double x = s.uniform(0.1, 50.0);
    const int l = 1 + i % 40;
    const double jl = specfun::bessel_j(l, x);
    const double r = std::abs(specfun::bessel_j(l - 1, x) + specfun::bessel_j(l + 1, x) -
                              2.0 * l / x * jl);
    w = std::max(w, r / std::max(1.0, std::abs(jl)));
  }
  return worst("specfun", "bessel_three_term_recurrence", w, 1e-10);
}

PropertyCheck harmonic_conjugation(Sampler &s) {
  double w = 0.0;
  for (int i = 0; i < 60; ++i) {
    const double theta = s.uniform(0.0, kPi);
    const double phi = s.uniform(0.0, 2.0 * kPi);
    for (int l = 0; l <= 8; ++l)
      for (int m = -l; m <= l; ++m) {
        const cplx lhs = (m % 2 ? -1.0 : 1.0) * specfun::spherical_harmonic(l, -m, theta, phi);
        w = std::max(w, std::abs(lhs - std::conj(specfun::spherical_harmonic(l, m, theta, phi))));
      }
  }
  return worst("specfun", "spherical_harmonic_conjugation", w, 1e-12);
}

// (-1)^{l-m} Y^{-m} = conj(Y^m) holds for the i^l-phased harmonics i^l Y_l^m.
PropertyCheck harmonic_conjugation_il(Sampler &s) {
  double w = 0.0;
  for (int i = 0; i < 60; ++i) {
    const double theta = s.uniform(0.0, kPi);
    const double phi = s.uniform(0.0, 2.0 * kPi);
    for (int l = 0; l <= 8; ++l) {
      const cplx il = std::pow(cplx(0.0, 1.0), l);
      for (int m = -l; m <= l; ++m) {
        const cplx lhs = ((l - m) % 2 ? -1.0 : 1.0) * il * specfun::spherical_harmonic(l, -m, theta, phi);
        w = std::max(w, std::abs(lhs - std::conj(il * specfun::spherical_harmonic(l, m, theta, phi))));
      }
    }
  }
  return worst("specfun", "conjugation_identity_il_phase", w, 1e-12);
}

double radial_overlap_q(int n1, int l1, int n2, int l2) {
  const auto r = quad::integrate_semi_infinite(
      [=](double q) {
        return cplx(specfun::hydrogenic_radial(n1, l1, q) *
                    specfun::hydrogenic_radial(n2, l2, q) * q * q);
      },
      0.0, {1e-13, 1e-11, 50});
  return r.value.real();
}

PropertyCheck radial_orthonormality() {
  double w = 0.0;
  for (int l = 0; l < 5; ++l)
    for (int n1 = l + 1; n1 <= 5; ++n1)
      for (int n2 = n1; n2 <= 5; ++n2)
        w = std::max(w, std::abs(radial_overlap_q(n1, l, n2, l) - (n1 == n2 ? 1.0 : 0.0)));
  return worst("specfun", "hydrogenic_radial_orthonormality", w, 1e-8);
}

PropertyCheck threej_orthogonality() {
  double w = 0.0;
  int triples = 0;
  for (int tj1 = 0; tj1 <= 6; ++tj1)
    for (int tj2 = 0; tj2 <= 6; ++tj2)
      for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2) {
        ++triples;
        for (int tm3 = -tj3; tm3 <= tj3; tm3 += 2) {
          double sum = 0.0;
          for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
            const int tm2 = -tm3 - tm1;
            if (std::abs(tm2) > tj2)
              continue;
            const double v = specfun::wigner_3j({tj1, tm1}, {tj2, tm2}, {tj3, tm3});
            sum += v * v;
          }
          w = std::max(w, std::abs(sum * (tj3 + 1) - 1.0));
        }
      }
  auto c = worst("specfun", "wigner_3j_orthogonality", w, 1e-12);
  c.detail += fmt(", %d triples", triples);
  return c;
}

// ------------------------------------------------------------- quadrature

struct Periodic {
  const char *name;
  std::function<cplx(double)> f;
};

std::vector<Periodic> battery() {
  return {
      {"1/(2-cos)", [](double y) { return cplx(1.0 / (2.0 - std::cos(y))); }},
      {"exp(cos)", [](double y) { return cplx(std::exp(std::cos(y))); }},
      {"cos^2", [](double y) { return cplx(std::cos(y) * std::cos(y)); }},
      {"(1.5+sin)^-1.5", [](double y) { return cplx(std::pow(1.5 + std::sin(y), -1.5)); }},
      {"exp(sin2y)cos", [](double y) { return cplx(std::exp(std::sin(2 * y)) * std::cos(y)); }},
      {"e^iy/(3-cos)", [](double y) { return std::polar(1.0, y) / (3.0 - std::cos(y)); }},
      {"log(2+cos)", [](double y) { return cplx(std::log(2.0 + std::cos(y))); }},
      {"(1+cos/2)^-2", [](double y) { return cplx(std::pow(1.0 + 0.5 * std::cos(y), -2)); }},
      {"cos3y exp(cos)", [](double y) { return cplx(std::cos(3 * y) * std::exp(std::cos(y))); }},
      {"sqrt(2+sin)", [](double y) { return cplx(std::sqrt(2.0 + std::sin(y))); }},
  };
}

std::vector<PropertyCheck> quadrature_checks() {
  const auto fs = battery();
  const quad::Tolerance tol{};
  double agree = 0.0, honesty = 0.0;
  std::vector<quad::IntegrationResult> res;
  for (const auto &p : fs) {
    const auto r = quad::integrate_1d(p.f, 0.0, 2.0 * kPi, tol);
    const cplx ref = quad::riemann_oracle(p.f, 0.0, 2.0 * kPi, 1000000);
    const double err = std::abs(r.value - ref);
    agree = std::max(agree, err / std::max(1.0, std::abs(ref)));
    // eps-level floor: the reference itself carries rounding error
    const double floor = 1e-13 * std::max(1.0, std::abs(ref));
    honesty = std::max(honesty, err / (10.0 * r.error_estimate + floor));
    res.push_back(r);
  }
  double lin = 0.0;
  const double alpha = 2.5, beta = -1.25;
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    const auto &f = fs[i].f;
    const auto &g = fs[i + 1].f;
    const auto h = quad::integrate_1d([&](double y) { return alpha * f(y) + beta * g(y); },
                                      0.0, 2.0 * kPi, tol);
    const cplx combo = alpha * res[i].value + beta * res[i + 1].value;
    const double allowed = std::abs(alpha) * std::max(res[i].error_estimate, tol.abs_tol) +
                           std::abs(beta) * std::max(res[i + 1].error_estimate, tol.abs_tol) +
                           std::max(h.error_estimate, tol.abs_tol) +
                           tol.rel_tol * std::abs(combo);
    lin = std::max(lin, std::abs(h.value - combo) / allowed);
  }
  return {worst("quadrature", "linearity", lin, 1.0),
          worst("quadrature", "agreement_with_riemann_1e6", agree, 1e-7),
          worst("quadrature", "error_estimate_honesty", honesty, 1.0)};
}

// ------------------------------------------------------------------ beams

std::vector<PropertyCheck> beam_checks(Sampler &s) {
  std::vector<PropertyCheck> out;

  bool null_ok = true;
  for (int l : {-3, -2, -1, 1, 2, 3, 5})
    for (double z : {0.0, 0.7}) {
      const auto b = beams::VortexBeam::electron(l, 1.3, 0.8);
      null_ok = null_ok && std::abs(beams::bessel_mode(b, {0.0, 0.4, z})) == 0.0;
    }
  const auto b0 = beams::VortexBeam::electron(0, 1.3, 0.8);
  const double axis = std::abs(beams::bessel_mode(b0, {0.0, 0.0, 0.0}));
  bool max_ok = std::abs(axis - 1.0) < 1e-15;
  for (int i = 0; i < 200; ++i)
    max_ok = max_ok && std::abs(beams::bessel_mode(b0, {s.uniform(1e-3, 40.0), 0.0, 0.0})) < axis;
  out.push_back({"beams", "on_axis_null_and_axis_maximum", null_ok && max_ok,
                 null_ok && max_ok ? "l != 0 vanish on axis, |J_0| peaks there"
                                   : "on-axis behaviour violated"});

  double closure = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int l = -4 + i % 9;
    const auto b = beams::VortexBeam::electron(l, 0.9, 0.5);
    const beams::CylindricalPoint p{s.uniform(0.2, 8.0), s.uniform(0.0, 2.0 * kPi), s.uniform(-3, 3)};
    const cplx a = beams::bessel_mode(b, p);
    const cplx c = beams::bessel_mode(b, {p.rho, p.phi + 2.0 * kPi, p.z});
    closure = std::max(closure, std::abs(a - c) / std::max(1e-300, std::abs(a)));
  }
  out.push_back(worst("beams", "azimuthal_2pi_closure", closure, 1e-12));

  double oam = 0.0;
  for (int i = 0; i < 60; ++i) {
    const int l = -3 + i % 7;
    const auto b = beams::VortexBeam::electron(l, 1.1, 0.6);
    const beams::CylindricalPoint p{s.uniform(0.5, 3.0), s.uniform(0.0, 2.0 * kPi), s.uniform(-2, 2)};
    oam = std::max(oam, std::abs(beams::oam_eigenvalue(b, p) - double(l)));
  }
  out.push_back(worst("beams", "oam_eigenvalue", oam, 1e-8));

  double disp = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double kp = s.uniform(0.1, 3.0), kz = s.uniform(0.1, 3.0);
    const auto o = beams::VortexBeam::optical(1, kp, kz);
    const auto e = beams::VortexBeam::electron(1, kp, kz);
    o.validate();
    e.validate();
    const double k2 = kp * kp + kz * kz;
    disp = std::max({disp, std::abs(o.omega - beams::kSpeedOfLight * std::sqrt(k2)) / o.omega,
                     std::abs(e.omega - 0.5 * k2) / e.omega});
  }
  out.push_back(worst("beams", "dispersion_relations", disp, 1e-15));
  return out;
}

// ----------------------------------------------------------------- matter

double angular_overlap(int l1, int m1, int l2, int m2) {
  constexpr int nphi = 32;
  const auto r = quad::integrate_1d(
      [=](double theta) {
        cplx sum = 0.0;
        for (int k = 0; k < nphi; ++k) {
          const double phi = (k + 0.5) * 2.0 * kPi / nphi;
          sum += std::conj(specfun::spherical_harmonic(l1, m1, theta, phi)) *
                 specfun::spherical_harmonic(l2, m2, theta, phi);
        }
        return sum * (2.0 * kPi / nphi) * std::sin(theta);
      },
      0.0, kPi, {1e-13, 1e-11, 40});
  return std::abs(r.value);
}

std::vector<PropertyCheck> matter_checks() {
  std::vector<PropertyCheck> out;
  std::vector<matter::HydrogenicState> states;
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < n; ++l)
      for (int m = -l; m <= l; ++m)
        states.push_back({n, l, m, 1.0});
  std::map<std::array<int, 4>, double> radial;
  double w = 0.0;
  for (const auto &a : states)
    for (const auto &b : states) {
      const std::array<int, 4> key{a.n, a.l, b.n, b.l};
      if (!radial.count(key))
        radial[key] = radial_overlap_q(a.n, a.l, b.n, b.l);
      const double ang = angular_overlap(a.l, a.m, b.l, b.m);
      const bool same = a.n == b.n && a.l == b.l && a.m == b.m;
      w = std::max(w, std::abs(radial[key] * ang - (same ? 1.0 : 0.0)));
    }
  out.push_back(worst("matter", "hydrogenic_orthonormality_n_le_3", w, 1e-7));

  bool order = true;
  for (int n = 1; n < 12; ++n) {
    const matter::HydrogenicState lo{n, 0, 0, 0.9995}, hi{n + 1, n, -n, 0.9995};
    const matter::HydrogenicState hi2{n + 1, 0, 0, 0.9995};
    order = order && lo.energy() < hi.energy() && hi.energy() == hi2.energy();
  }
  out.push_back({"matter", "energy_ordering_and_degeneracy", order,
                 order ? "W(n) increasing, independent of l and m" : "ordering violated"});

  bool counts = true;
  for (auto sh : {matter::Shell::p_half, matter::Shell::p_threehalf, matter::Shell::d_threehalf,
                  matter::Shell::d_fivehalf})
    counts = counts && int(matter::enumerate_core_states(sh).size()) == matter::two_j(sh) + 1;
  out.push_back({"matter", "core_state_counts", counts, counts ? "2j+1 per shell" : "count mismatch"});

  const auto sys = matter::AtomicSystem::from_masses(1.0, matter::kProtonMass);
  const double mu = matter::kProtonMass / (1.0 + matter::kProtonMass);
  const bool masses = std::abs(sys.reduced_mass - mu) <= 1e-15 &&
                      sys.total_mass == 1.0 + matter::kProtonMass;
  out.push_back({"matter", "reduced_and_total_mass", masses, fmt("mu = %.15f", sys.reduced_mass)});
  return out;
}

// ------------------------------------------------------------------- ov

std::vector<PropertyCheck> ov_checks() {
  std::vector<PropertyCheck> out;
  const beams::Vec3 pol{0.48, 0.6, 0.64};
  const double kz = 1.0;
  const std::vector<matter::HydrogenicState> initials{{2, 1, 0, 1.0}, {3, 2, 0, 1.0}};
  std::vector<matter::HydrogenicState> finals;
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l < n; ++l)
      for (int m = -l; m <= l; ++m)
        finals.push_back({n, l, m, 1.0});

  int combos = 0, nonzero = 0, mismatches = 0, flag_errors = 0;
  double brute = 0.0;
  for (int l : {1, 2}) {
    const auto beam = beams::VortexBeam::optical(l, 1.0, kz, 1.0, pol);
    for (const auto &si : initials)
      for (const auto &sf : finals) {
        if (std::abs(sf.m - si.m) > 3)
          continue;
        for (int dL = -3; dL <= 3; ++dL)
          for (int dn : {-1, 0, 1}) {
            const double kzi = 0.3;
            const auto ci = matter::ComState::ring(0, 0.0, kzi, 1.8, 0.4);
            const auto cf = matter::ComState::ring(dL, 0.0, kzi - dn * kz, 1.8, 0.4);
            const matter::PhotonOccupation ni{1}, nf{1 + dn};
            const auto r = ov::ov_matrix_element(beam, si, sf, ci, cf, ni, nf);
            ++combos;
            const bool pred = ((dL == l && dn == -1) || (dL == -l && dn == 1)) &&
                              std::abs(sf.l - si.l) == 1 && std::abs(sf.m - si.m) <= 1 &&
                              sf.n != si.n;
            const bool nz = r.value != cplx(0.0);
            nonzero += nz;
            if (pred != nz || (nz && std::abs(r.value) < 1e-12))
              ++mismatches;
            const auto &cp = r.com_photon;
            if ((!cp.delta_L_satisfied || !cp.delta_n_satisfied) && cp.amplitude != cplx(0.0))
              ++flag_errors;

            // the same factor with a numerical azimuthal integral
            if (si.n == 2 && sf.n == 3) {
              const int sign = cp.channel == ov::Channel::absorption ? 1 : -1;
              const int k = ci.L + sign * l - cf.L;
              const cplx az = quad::riemann_oracle(
                  [k](double phi) { return std::polar(1.0, k * phi); }, 0.0, 2.0 * kPi, 64);
              cplx recon = 0.0;
              if (cp.delta_n_satisfied) {
                const auto ov = ov::radial_overlap(ci, cf, l, 1.0, ov::OvSettings{}.tol);
                const cplx mode(0.0, -sign / beam.omega);
                const double photon = std::sqrt(sign == 1 ? 1.0 : 2.0);
                recon = mode * photon * az * ov.value * cp.axial_window;
              }
              brute = std::max(brute, std::abs(recon - cp.amplitude));
            }
          }
      }
  }
  out.push_back({"ov", "oam_bookkeeping_scan", mismatches == 0,
                 fmt("%d combinations, %d nonzero, %d mismatches", combos, nonzero, mismatches)});
  out.push_back({"ov", "zero_amplitude_when_delta_false", flag_errors == 0,
                 fmt("%d violations", flag_errors)});
  out.push_back(worst("ov", "numerical_azimuthal_integral_equivalence", brute, 1e-10));

  double herm = 0.0;
  const quad::Tolerance tol{1e-14, 1e-12, 40};
  for (int l : {1, 2, 3}) {
    const auto a = matter::ComState::ring(0, 0.7, 0.0, 1.8, 0.4);
    const auto b = matter::ComState::ring(l, 0.3, 0.0, 2.1, 0.5);
    const cplx ab = ov::radial_overlap(a, b, l, 1.2, tol).value;
    const cplx ba = ov::radial_overlap(b, a, l, 1.2, tol).value;
    herm = std::max(herm, std::abs(ab - std::conj(ba)) / std::abs(ab));
  }
  out.push_back(worst("ov", "swapped_pair_radial_overlap", herm, 1e-10));
  return out;
}

// ------------------------------------------------------------------- ev

std::vector<PropertyCheck> ev_checks(Sampler &s) {
  std::vector<PropertyCheck> out;
  double imag = 0.0, parity = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double G = s.uniform(0.05, 5.0);
    const double F = G * s.uniform(1.05, 4.0);
    const int n = i % 5;
    const auto yp = ev::y_alpha(n, F, G);
    const auto ym = ev::y_alpha(-n, F, G);
    imag = std::max({imag, std::abs(yp.imag), std::abs(ym.imag)});
    parity = std::max(parity, std::abs(yp.value - ym.value) / std::max(1.0, std::abs(yp.value)));
  }
  out.push_back(worst("ev", "y_alpha_reality", imag, 1e-10));
  out.push_back(worst("ev", "y_alpha_parity", parity, 1e-12));

  bool mono = true;
  for (double G : {0.5, 1.0, 3.0}) {
    double prev = INFINITY;
    for (double F = 1.1 * G; F < 12.0 * G; F *= 1.3) {
      const double v = ev::y_alpha(0, F, G).value;
      mono = mono && v < prev;
      prev = v;
    }
  }
  out.push_back({"ev", "y_zero_decreasing_in_F", mono, mono ? "strict on the grid" : "not monotone"});

  double ident = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double rv = s.uniform(0.0, 4.0), rr = s.uniform(0.0, 4.0);
    const double zv = s.uniform(-3, 3), zr = s.uniform(-3, 3);
    const double pv = s.uniform(0, 2 * kPi), pr = s.uniform(0, 2 * kPi);
    const double dx = rv * std::cos(pv) - rr * std::cos(pr);
    const double dy = rv * std::sin(pv) - rr * std::sin(pr);
    const double direct = dx * dx + dy * dy + (zv - zr) * (zv - zr);
    double fg;
    try {
      const auto k = ev::kernel_fg(rv, zv, rr, zr);
      fg = k.F - k.G * std::cos(pv - pr);
    } catch (const DomainError &) {
      continue;
    }
    ident = std::max(ident, std::abs(fg - direct) / std::max(1.0, direct));
  }
  out.push_back(worst("ev", "kernel_distance_identity", ident, 1e-12));

  double coef = 0.0;
  for (double F : {2.0, 5.0, 10.0}) {
    const double G = F == 5.0 ? 3.0 : 1.0;
    const auto fk = ev::FixedKernel::from_geometry(ev::KernelGeometry::from_fg(F, G));
    for (int n = -2; n <= 2; ++n) {
      const auto k = ev::kernel_coefficients(n, 0, fk);
      const double ym = ev::y_alpha(n - 1, F, G).value;
      const double y0 = ev::y_alpha(n, F, G).value;
      const double yp = ev::y_alpha(n + 1, F, G).value;
      coef = std::max({coef, std::abs(k.C - (fk.kappa * ym - fk.lambda * y0)),
                       std::abs(k.D - (fk.kappa * yp - fk.lambda * y0)),
                       std::abs(k.I - fk.eta * y0)});
    }
  }
  out.push_back(worst("ev", "kernel_coefficient_identities", coef, 1e-14));

  // angular oracle: deltas are exact
  const auto geo = ev::KernelGeometry::from_fg(2.0, 1.0);
  double largest = 0.0, leak = 0.0;
  for (auto comp : {ev::KernelComponent::plus, ev::KernelComponent::minus, ev::KernelComponent::z})
    for (int dl = -2; dl <= 2; ++dl)
      for (int dL = -2; dL <= 2; ++dL) {
        const double v = std::abs(ev::angular_oracle(dl, 0, dL, 0, comp, geo, 64));
        const int shift = comp == ev::KernelComponent::plus    ? -1
                          : comp == ev::KernelComponent::minus ? 1
                                                               : 0;
        if (dl + dL + shift == 0)
          largest = std::max(largest, v);
        else
          leak = std::max(leak, v);
      }
  out.push_back(worst("ev", "angular_oracle_delta_exactness", leak / largest, 1e-6));

  // at most one channel, and helicity pairing
  const auto fk = ev::FixedKernel::from_geometry(geo);
  int multi = 0;
  for (int li = -1; li <= 1; ++li)
    for (int lf = -1; lf <= 1; ++lf)
      for (int Li = -1; Li <= 1; ++Li)
        for (int Lf = -1; Lf <= 1; ++Lf)
          for (int mf = -1; mf <= 1; ++mf) {
            const auto r = ev::ev_matrix_element(
                beams::VortexBeam::electron(li, 1.0, 1.0), beams::VortexBeam::electron(lf, 1.0, 1.0),
                {1, 0, 0, 1.0}, {2, 1, mf, 1.0}, matter::ComState::ring(Li, 0.0, 0.0, 1.8, 0.4),
                matter::ComState::ring(Lf, 0.0, 0.0, 1.8, 0.4), fk);
            multi += (r.Q != cplx(0.0)) + (r.S != cplx(0.0)) + (r.U != cplx(0.0)) > 1;
          }
  out.push_back({"ev", "at_most_one_channel", multi == 0, fmt("%d violations", multi)});

  double pair = 0.0;
  const auto ring = matter::ComState::ring(0, 0.0, 0.0, 1.8, 0.4);
  for (double F : {2.0, 5.0, 10.0}) {
    const double G = F == 5.0 ? 3.0 : 1.0;
    const auto k = ev::FixedKernel::from_geometry(ev::KernelGeometry::from_fg(F, G));
    const auto q = ev::ev_matrix_element(beams::VortexBeam::electron(1, 1, 1),
                                         beams::VortexBeam::electron(0, 1, 1), {1, 0, 0, 1.0},
                                         {2, 1, 1, 1.0}, ring, ring, k);
    const auto sm = ev::ev_matrix_element(beams::VortexBeam::electron(-1, 1, 1),
                                          beams::VortexBeam::electron(0, 1, 1), {1, 0, 0, 1.0},
                                          {2, 1, -1, 1.0}, ring, ring, k);
    pair = std::max(pair, std::abs(std::abs(q.Q) - std::abs(sm.S)) / std::abs(q.Q));
  }
  out.push_back(worst("ev", "helicity_pairing_Q_S", pair, 1e-12));
  return out;
}

// ---------------------------------------------------------------- ledge

std::vector<PropertyCheck> ledge_checks(Sampler &s) {
  std::vector<PropertyCheck> out;
  const auto plus = ledge::enumerate_edge_transitions(1);
  const auto minus = ledge::enumerate_edge_transitions(-1);
  bool mapped = plus.size() == 6 && minus.size() == 6;
  double strength = 0.0;
  bool rule = true;
  for (const auto &t : plus) {
    bool found = false;
    for (const auto &u : minus)
      if (u.edge == t.edge && u.initial.shell == t.initial.shell &&
          u.initial.two_mj == -t.initial.two_mj && u.final_state.two_mj == -t.final_state.two_mj) {
        found = true;
        strength = std::max(strength, std::abs(u.strength - t.strength));
      }
    mapped = mapped && found;
  }
  for (const auto *set : {&plus, &minus})
    for (const auto &t : *set)
      rule = rule && t.final_state.two_mj - t.initial.two_mj == 2 * t.beam_l &&
             t.final_state.shell == ledge::final_shell(t.edge) &&
             t.initial.shell == ledge::initial_shell(t.edge);
  out.push_back({"ledge", "mirror_transition_sets", mapped, fmt("%zu + %zu transitions", plus.size(), minus.size())});
  out.push_back({"ledge", "delta_mj_equals_beam_l", rule, rule ? "all transitions" : "violated"});
  out.push_back(worst("ledge", "mirror_strength_equality", strength, 1e-12));

  const auto coupling = ledge::HelicityCoupling::from_kernel(
      ev::FixedKernel::from_geometry(ev::KernelGeometry::from_fg(2.0, 1.0)));
  double anti = 0.0, lin = 0.0;
  bool nonneg = true;
  for (int i = 0; i < 20; ++i) {
    auto rnd = [&](double) { return s.uniform(0.0, 2.0); };
    const auto a = ledge::DensityOfStates::from_function(rnd);
    const auto b = ledge::DensityOfStates::from_function(rnd);
    ledge::DensityOfStates sum;
    for (const auto &[key, w] : a.weights())
      sum.set(key.first, key.second, 0.7 * w + 1.9 * b.at(key.first, key.second));
    const auto da = ledge::dichroism(a, coupling);
    const auto db = ledge::dichroism(b, coupling);
    const auto ds = ledge::dichroism(sum, coupling);
    const auto dr = ledge::dichroism(a.reflected(), coupling);
    const double scale = da.gamma_plus + da.gamma_minus;
    anti = std::max(anti, std::abs(da.dichroism + dr.dichroism) / scale);
    lin = std::max(lin, std::abs(ds.dichroism - (0.7 * da.dichroism + 1.9 * db.dichroism)) /
                            (ds.gamma_plus + ds.gamma_minus));
    for (const auto &[edge, rates] : da.per_edge)
      nonneg = nonneg && rates.first >= 0.0 && rates.second >= 0.0;
  }
  out.push_back(worst("ledge", "dichroism_reflection_antisymmetry", anti, 1e-12));
  out.push_back(worst("ledge", "dichroism_linearity", lin, 1e-12));
  out.push_back({"ledge", "rates_non_negative", nonneg, nonneg ? "20 random densities" : "negative rate"});
  return out;
}

// ------------------------------------------------------------------ cli

std::vector<PropertyCheck> cli_checks(Sampler &s) {
  std::vector<ResultRecord> recs;
  std::vector<double> values;
  for (int i = 0; i < 50; ++i) {
    const double v = std::ldexp(s.uniform(-1.0, 1.0), int(s.uniform(-300, 300)));
    values.push_back(v);
    ResultRecord r{"y-alpha"};
    r.outputs["value"] = v;
    recs.push_back(r);
  }
  const std::string a = emit_json(recs);
  const auto parsed = Json::parse(a);
  bool exact = parsed.size() == values.size();
  for (std::size_t i = 0; exact && i < values.size(); ++i)
    exact = std::bit_cast<std::uint64_t>(parsed[i]["outputs"]["value"].get<double>()) ==
            std::bit_cast<std::uint64_t>(values[i]);
  const bool det = a == emit_json(recs) && emit_csv(recs) == emit_csv(recs);
  return {{"cli", "json_round_trip_bit_exact", exact, "50 random doubles"},
          {"cli", "emit_deterministic", det, det ? "byte-identical" : "output differs"}};
}

template <class Fn> void guarded(std::vector<PropertyCheck> &out, const char *module, Fn &&fn) {
  try {
    for (auto &c : fn())
      out.push_back(std::move(c));
  } catch (const std::exception &e) {
    out.push_back({module, "exception", false, e.what()});
  }
}

} // namespace

std::vector<PropertyCheck> run_invariant_suite() {
  Sampler s;
  std::vector<PropertyCheck> out;
  guarded(out, "specfun", [&] {
    return std::vector<PropertyCheck>{bessel_reflection(s), bessel_recurrence(s),
                                      harmonic_conjugation(s), harmonic_conjugation_il(s),
                                      radial_orthonormality(),
                                      threej_orthogonality()};
  });
  guarded(out, "quadrature", [&] { return quadrature_checks(); });
  guarded(out, "beams", [&] { return beam_checks(s); });
  guarded(out, "matter", [&] { return matter_checks(); });
  guarded(out, "ov", [&] { return ov_checks(); });
  guarded(out, "ev", [&] { return ev_checks(s); });
  guarded(out, "ledge", [&] { return ledge_checks(s); });
  guarded(out, "cli", [&] { return cli_checks(s); });
  return out;
}

} // namespace vortex::cli
