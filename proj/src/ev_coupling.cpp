#include "vortex/ev_coupling.hpp"
#include "vortex/errors.hpp"
#include "vortex/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace vortex::ev {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
  if (std::abs(x) < 1e-8)
    return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

void check_fg(double F, double G) {
  if (!std::isfinite(F) || !std::isfinite(G) || G < 0.0)
    throw DomainError("kernel: require finite F and G >= 0");
  if (!(F > G))
    throw DomainError("kernel: singular configuration (F <= G)");
}

struct YTriple {
  double minus, zero, plus;
  std::int64_t evaluations;
  bool converged;
};

YTriple y_triple(int n, double F, double G, const quad::Tolerance &tol) {
  const auto a = y_alpha(n - 1, F, G, tol);
  const auto b = y_alpha(n, F, G, tol);
  const auto c = y_alpha(n + 1, F, G, tol);
  return {a.value, b.value, c.value, a.evaluations + b.evaluations + c.evaluations,
          a.converged && b.converged && c.converged};
}

KernelCoefficients fixed_coefficients(int n, const FixedKernel &k,
                                      const quad::Tolerance &tol) {
  check_fg(k.F, k.G);
  const YTriple y = y_triple(n, k.F, k.G, tol);
  KernelCoefficients out;
  out.kappa = k.kappa;
  out.lambda = k.lambda;
  out.eta = k.eta;
  out.y_minus = y.minus;
  out.y_zero = y.zero;
  out.y_plus = y.plus;
  out.C = k.kappa * y.minus - k.lambda * y.zero;
  out.D = k.kappa * y.plus - k.lambda * y.zero;
  out.I = k.eta * y.zero;
  out.evaluations = y.evaluations;
  out.converged = y.converged;
  return out;
}

// Y(n-1), Y(n), Y(n+1) for the integrated mode. Close to the singular ring
// (F/G <= 3) the orders 0 and 1 come from complete elliptic integrals and
// higher orders from the upward recurrence
//   (k - 1/2) (G/2) Y(k+1) = k F Y(k) - (k + 1/2) (G/2) Y(k-1),
// which is well conditioned there. Further out a periodic trapezoid rule
// converges in a few dozen nodes.
struct YSweep {
  double minus = 0.0, zero = 0.0, plus = 0.0;
  std::int64_t evaluations = 0;
  bool converged = true;
};

YSweep y_sweep(int n, double F, double G, double rel_tol) {
  YSweep out;
  if (G == 0.0) {
    const double y0 = 2.0 * kPi * std::pow(F, -1.5);
    out.minus = n == 1 ? y0 : 0.0;
    out.zero = n == 0 ? y0 : 0.0;
    out.plus = n == -1 ? y0 : 0.0;
    out.evaluations = 1;
    return out;
  }
  if (F <= 3.0 * G) {
    const int top = std::abs(n) + 1;
    const double s = std::sqrt(F + G);
    const double modulus = std::sqrt(2.0 * G / (F + G));
    const double half = 4.0 * std::comp_ellint_1(modulus) / s;
    std::vector<double> y(static_cast<std::size_t>(top) + 1);
    y[0] = 4.0 * std::comp_ellint_2(modulus) / ((F - G) * s);
    y[1] = (F * y[0] - half) / G;
    for (int j = 1; j < top; ++j)
      y[j + 1] = (j * F * y[j] - (j + 0.5) * 0.5 * G * y[j - 1]) / ((j - 0.5) * 0.5 * G);
    out.minus = y[std::abs(n - 1)];
    out.zero = y[std::abs(n)];
    out.plus = y[std::abs(n + 1)];
    out.evaluations = 1;
    return out;
  }
  auto sweep = [&](int panels) {
    std::array<double, 3> acc{};
    const double h = 2.0 * kPi / panels;
    for (int j = 0; j < panels; ++j) {
      const double y = j * h;
      const double den = F - G * std::cos(y);
      const double k = 1.0 / (den * std::sqrt(den));
      for (int a = 0; a < 3; ++a)
        acc[a] += k * std::cos((n - 1 + a) * y);
    }
    for (auto &v : acc)
      v *= h;
    out.evaluations += panels;
    return acc;
  };
  int panels = 32;
  auto prev = sweep(panels);
  for (;;) {
    panels *= 2;
    const auto cur = sweep(panels);
    double change = 0.0, scale = 0.0;
    for (int a = 0; a < 3; ++a) {
      change = std::max(change, std::abs(cur[a] - prev[a]));
      scale = std::max(scale, std::abs(cur[a]));
    }
    prev = cur;
    if (change <= rel_tol * scale)
      break;
    if (panels >= (1 << 16)) {
      out.converged = false;
      break;
    }
  }
  out.minus = prev[0];
  out.zero = prev[1];
  out.plus = prev[2];
  return out;
}

// Outer variables (rho_v, rho_R, u = z_v - z_R). The centre coordinate
// s = (z_v + z_R)/2 is integrated analytically over its allowed range of
// length l_z - |u|. The tube |(rho_v - rho_R, u)| < tube_radius is cut out
// of the u range exactly, so every inner piece is smooth.
KernelCoefficients integrated_coefficients(int n, const IntegratedKernel &k) {
  if (k.beam_i.kind != beams::BeamKind::electron ||
      k.beam_f.kind != beams::BeamKind::electron)
    throw DomainError("kernel_coefficients: integrated mode needs electron beams");
  k.beam_i.validate();
  k.beam_f.validate();
  k.com_i.validate();
  k.com_f.validate();
  k.tol.validate();
  if (!(k.r_max > 0.0) || !(k.l_z > 0.0) || !(k.tube_radius > 0.0))
    throw DomainError("kernel_coefficients: integrated mode needs r_max, l_z, tube_radius > 0");

  const double n_i = beams::ev_normalization(k.beam_i.l, k.beam_i.k_perp, k.r_max, k.l_z);
  const double n_f = beams::ev_normalization(k.beam_f.l, k.beam_f.k_perp, k.r_max, k.l_z);
  const double a = k.beam_i.k_z - k.beam_f.k_z;
  const double b = k.com_i.K_z - k.com_f.K_z;
  const double lz = k.l_z;
  const double tube = k.tube_radius;
  const double r_com = std::min({k.r_max, k.com_i.support(), k.com_f.support()});
  const quad::Tolerance &tol = k.tol;
  const double y_rel = 1e-11;

  enum Which { C, D, I, Kappa, Lambda, Eta };
  std::int64_t y_evals = 0;
  bool y_ok = true;

  auto integrand = [&](Which which, double rho_v, double rho_r, double u) -> cplx {
    const double span = lz - std::abs(u);
    const cplx axial = std::polar(span * sinc(0.5 * (a + b) * span), 0.5 * (a - b) * u);
    const double beam = n_i * n_f * specfun::bessel_j(k.beam_i.l, k.beam_i.k_perp * rho_v) *
                        specfun::bessel_j(k.beam_f.l, k.beam_f.k_perp * rho_v);
    const cplx com = std::conj(k.com_f.radial(rho_r)) * k.com_i.radial(rho_r);
    const cplx w = beam * com * axial * rho_v * rho_r / lz;
    if (w == cplx(0.0))
      return 0.0;
    switch (which) {
    case Kappa: return w * rho_v;
    case Lambda: return w * rho_r;
    case Eta: return w * u;
    default: break;
    }
    const double F = rho_v * rho_v + rho_r * rho_r + u * u;
    const double G = 2.0 * rho_v * rho_r;
    const auto y = y_sweep(n, F, G, y_rel);
    y_evals += y.evaluations;
    y_ok = y_ok && y.converged;
    switch (which) {
    case C: return w * (rho_v * y.minus - rho_r * y.zero);
    case D: return w * (rho_v * y.plus - rho_r * y.zero);
    default: return w * u * y.zero;
    }
  };

  auto integrate = [&](Which which) {
    quad::IntegrationResult total;
    std::int64_t evals = 0;
    bool ok = true;
    auto over_u = [&](double rho_v, double rho_r) -> cplx {
      const double d = rho_v - rho_r;
      const double cut = std::abs(d) < tube ? std::sqrt(tube * tube - d * d) : 0.0;
      if (cut >= lz)
        return 0.0;
      cplx sum = 0.0;
      for (double sign : {-1.0, 1.0}) {
        const double lo = std::max(cut, 0.0);
        const auto r = quad::integrate_1d(
            [&](double t) { return integrand(which, rho_v, rho_r, sign * t); }, lo, lz, tol);
        evals += r.evaluations;
        ok = ok && r.converged;
        sum += r.value;
      }
      return sum;
    };
    auto over_rho_r = [&](double rho_v) -> cplx {
      // break points where the tube starts and stops cutting the u range
      std::vector<double> cuts{0.0};
      for (double c : {rho_v - tube, rho_v, rho_v + tube})
        if (c > 0.0 && c < r_com)
          cuts.push_back(c);
      cuts.push_back(r_com);
      cplx sum = 0.0;
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const auto r = quad::integrate_1d([&](double rr) { return over_u(rho_v, rr); },
                                          cuts[i], cuts[i + 1], tol);
        ok = ok && r.converged;
        sum += r.value;
      }
      return sum;
    };
    // the outer range is split where rho_v enters and leaves the COM support
    std::vector<double> cuts{0.0};
    for (double c : {r_com - tube, r_com + tube})
      if (c > 0.0 && c < k.r_max)
        cuts.push_back(c);
    cuts.push_back(k.r_max);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const auto r = quad::integrate_1d(over_rho_r, cuts[i], cuts[i + 1], tol);
      total.value += r.value;
      total.error_estimate += r.error_estimate;
      ok = ok && r.converged;
    }
    total.evaluations = evals;
    total.converged = ok;
    return total;
  };

  KernelCoefficients out;
  const auto c = integrate(C);
  const auto d = integrate(D);
  const auto i = integrate(I);
  const auto kap = integrate(Kappa);
  const auto lam = integrate(Lambda);
  const auto eta = integrate(Eta);
  out.C = c.value;
  out.D = d.value;
  out.I = i.value;
  out.kappa = kap.value;
  out.lambda = lam.value;
  out.eta = eta.value;
  out.error_estimate = c.error_estimate + d.error_estimate + i.error_estimate;
  out.evaluations = c.evaluations + d.evaluations + i.evaluations + kap.evaluations +
                    lam.evaluations + eta.evaluations + y_evals;
  out.converged = c.converged && d.converged && i.converged && kap.converged &&
                  lam.converged && eta.converged && y_ok;
  return out;
}

} // namespace

KernelGeometry KernelGeometry::from_fg(double F, double G) {
  check_fg(F, G);
  if (G == 0.0) {
    const double r = std::sqrt(0.5 * F);
    return {r, r, 0.0, 0.0};
  }
  const double s2 = 0.5 * G;
  for (double t : {2.0, 1.5, 1.2, 1.0}) {
    const double transverse = s2 * (t * t + 1.0 / (t * t));
    if (transverse <= F) {
      const double s = std::sqrt(s2);
      return {t * s, std::sqrt(F - transverse), s / t, 0.0};
    }
  }
  throw DomainError("KernelGeometry::from_fg: no geometry for F <= G");
}

KernelFG kernel_fg(double rho_v, double z_v, double rho_r, double z_r,
                   double margin) {
  if (!std::isfinite(rho_v) || !std::isfinite(z_v) || !std::isfinite(rho_r) ||
      !std::isfinite(z_r))
    throw DomainError("kernel_fg: non-finite coordinate");
  const double dz = z_v - z_r;
  KernelFG out{rho_v * rho_v + rho_r * rho_r + dz * dz, 2.0 * rho_v * rho_r};
  if (!(out.F > 0.0) || out.F < (1.0 + margin) * out.G)
    throw DomainError("kernel_fg: singular kernel (F too close to G)");
  return out;
}

YAlphaResult y_alpha(int n, double F, double G, const quad::Tolerance &tol) {
  check_fg(F, G);
  YAlphaResult out;
  if (G == 0.0) {
    out.value = n == 0 ? 2.0 * kPi * std::pow(F, -1.5) : 0.0;
    out.evaluations = 1;
    return out;
  }
  // integrate over [-pi, pi]: the peak of the kernel at y = 0 sits on the
  // first bisection point and the sine part cancels pairwise
  const auto r = quad::integrate_1d(
      [=](double y) {
        const double den = F - G * std::cos(y);
        return std::polar(1.0 / (den * std::sqrt(den)), n * y);
      },
      -kPi, kPi, tol);
  out.value = r.value.real();
  out.imag = r.value.imag();
  out.error_estimate = r.error_estimate;
  out.evaluations = r.evaluations;
  out.converged = r.converged;
  return out;
}

FixedKernel FixedKernel::from_geometry(const KernelGeometry &g, double margin) {
  const KernelFG fg = kernel_fg(g.rho_v, g.z_v, g.rho_r, g.z_r, margin);
  return {fg.F, fg.G, g.rho_v, g.rho_r, g.z_v - g.z_r};
}

KernelCoefficients kernel_coefficients(int l, int l_prime,
                                       const GeometryMode &mode,
                                       const quad::Tolerance &tol) {
  const int n = l - l_prime;
  if (const auto *fixed = std::get_if<FixedKernel>(&mode))
    return fixed_coefficients(n, *fixed, tol);
  return integrated_coefficients(n, std::get<IntegratedKernel>(mode));
}

std::string channel_name(EvChannel c) {
  switch (c) {
  case EvChannel::plus: return "plus";
  case EvChannel::minus: return "minus";
  case EvChannel::zero: return "zero";
  case EvChannel::none: return "none";
  }
  return "none";
}

EvTransitionAmplitude ev_matrix_element(const beams::VortexBeam &beam_i,
                                        const beams::VortexBeam &beam_f,
                                        const matter::HydrogenicState &internal_i,
                                        const matter::HydrogenicState &internal_f,
                                        const matter::ComState &com_i,
                                        const matter::ComState &com_f,
                                        const GeometryMode &mode,
                                        const quad::Tolerance &tol) {
  if (beam_i.kind != beams::BeamKind::electron || beam_f.kind != beams::BeamKind::electron)
    throw DomainError("ev_matrix_element: beam kind mismatch");
  EvTransitionAmplitude out;
  const int lhs = com_i.L + beam_i.l;
  const int rhs = com_f.L + beam_f.l;
  const int dm = internal_f.m - internal_i.m;
  if (lhs == rhs + 1 && dm == 1)
    out.active_channel = EvChannel::plus;
  else if (lhs == rhs - 1 && dm == -1)
    out.active_channel = EvChannel::minus;
  else if (lhs == rhs && dm == 0)
    out.active_channel = EvChannel::zero;

  out.dipole = ov::dipole_matrix_element(internal_i, internal_f);
  if (out.active_channel == EvChannel::none)
    return out;

  out.kernel = kernel_coefficients(beam_i.l, beam_f.l, mode, tol);
  switch (out.active_channel) {
  case EvChannel::plus: out.Q = out.kernel.C * out.dipole.plus; break;
  case EvChannel::minus: out.S = out.kernel.D * out.dipole.minus; break;
  case EvChannel::zero: out.U = out.kernel.I * out.dipole.z; break;
  case EvChannel::none: break;
  }
  return out;
}

cplx angular_oracle(int l, int l_prime, int L, int L_prime,
                    KernelComponent component, const KernelGeometry &g,
                    int n_panels) {
  if (n_panels < 1)
    throw DomainError("angular_oracle: need at least one panel");
  const double h = 2.0 * kPi / n_panels;
  const int dl = l - l_prime;
  const int dL = L - L_prime;
  cplx sum = 0.0;
  for (int i = 0; i < n_panels; ++i) {
    const double phi_v = (i + 0.5) * h;
    const double xv = g.rho_v * std::cos(phi_v);
    const double yv = g.rho_v * std::sin(phi_v);
    cplx row = 0.0;
    for (int j = 0; j < n_panels; ++j) {
      const double phi_r = (j + 0.5) * h;
      const double dx = xv - g.rho_r * std::cos(phi_r);
      const double dy = yv - g.rho_r * std::sin(phi_r);
      const double dz = g.z_v - g.z_r;
      const double d2 = dx * dx + dy * dy + dz * dz;
      const double inv = 1.0 / (d2 * std::sqrt(d2));
      cplx value;
      switch (component) {
      case KernelComponent::plus: value = cplx(dx, -dy) * inv; break;
      case KernelComponent::minus: value = cplx(dx, dy) * inv; break;
      case KernelComponent::z: value = dz * inv; break;
      }
      row += value * std::polar(1.0, dl * phi_v + dL * phi_r);
    }
    sum += row;
  }
  return sum * h * h;
}

} // namespace vortex::ev
