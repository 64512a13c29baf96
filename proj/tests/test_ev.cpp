#include "doctest.h"

#include "vortex/errors.hpp"
#include "vortex/ev_coupling.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace vortex;
using namespace vortex::ev;
using beams::VortexBeam;
using matter::ComState;
using matter::HydrogenicState;

namespace {
constexpr double kPi = std::numbers::pi;

double y_riemann(int n, double F, double G, std::int64_t panels = 1000000) {
  return quad::riemann_oracle(
             [&](double y) { return std::cos(n * y) * std::pow(F - G * std::cos(y), -1.5); },
             0.0, 2 * kPi, panels)
      .real();
}

const ComState kRing = ComState::ring(0, 0.0, 0.0, 1.8, 0.4);
} // namespace

TEST_SUITE("ev") {

TEST_CASE("kernel F and G") {
  const auto a = kernel_fg(1.0, 0.0, 0.0, 0.0);
  CHECK(a.F == 1.0);
  CHECK(a.G == 0.0);
  CHECK_THROWS_AS(kernel_fg(1.0, 0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(kernel_fg(0.0, 0.0, 0.0, 0.0), DomainError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 3.0), ang(0.0, 2 * kPi);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double rv = u(rng), zv = u(rng) - 1.5, rr = u(rng), zr = u(rng) - 1.5;
    const double pv = ang(rng), pr = ang(rng);
    const double dx = rv * std::cos(pv) - rr * std::cos(pr);
    const double dy = rv * std::sin(pv) - rr * std::sin(pr);
    const double direct = dx * dx + dy * dy + (zv - zr) * (zv - zr);
    const auto fg = kernel_fg(rv, zv, rr, zr, 0.0);
    worst = std::max(worst, std::abs(fg.F - fg.G * std::cos(pv - pr) - direct) / (1.0 + direct));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("geometry from F and G reproduces them") {
  for (auto [F, G] : {std::pair{2.0, 1.0}, {5.0, 3.0}, {10.0, 1.0}}) {
    const auto g = KernelGeometry::from_fg(F, G);
    const auto fg = kernel_fg(g.rho_v, g.z_v, g.rho_r, g.z_r);
    CHECK(fg.F == doctest::Approx(F).epsilon(1e-14));
    CHECK(fg.G == doctest::Approx(G).epsilon(1e-14));
  }
  CHECK_THROWS_AS(KernelGeometry::from_fg(1.0, 1.0), DomainError);
}

TEST_CASE("Y closed form at G = 0") {
  CHECK(y_alpha(0, 2.0, 0.0).value == doctest::Approx(2 * kPi * std::pow(2.0, -1.5)).epsilon(1e-14));
  CHECK(y_alpha(3, 2.0, 0.0).value == 0.0);
  CHECK(y_alpha(-1, 7.0, 0.0).value == 0.0);
}

TEST_CASE("Y against high-precision references") {
  struct Ref {
    int n;
    double F, G, value;
  };
  const Ref refs[] = {
      {0, 2.0, 1.0, 2.91258419032826824720645065257},
      {1, 2.0, 1.0, 1.13948804406945705870755778475},
      {2, 2.0, 1.0, 0.378151781570851728041110320334},
      {0, 5.0, 3.0, 0.856345929490500175566253864921},
      {3, 10.0, 1.0, 5.51805520239835658714307493441e-5},
      {1, 1.05, 1.0, 51.5460975113200261243629364165},
  };
  for (const auto &r : refs) {
    const auto y = y_alpha(r.n, r.F, r.G);
    CHECK(y.converged);
    CHECK(y.value == doctest::Approx(r.value).epsilon(1e-11));
    CHECK(std::abs(y.imag) <= 1e-10);
  }
}

TEST_CASE("Y matches the Riemann oracle") {
  CHECK(std::abs(y_alpha(1, 2.0, 1.0).value - y_riemann(1, 2.0, 1.0)) < 1e-8);
}

TEST_CASE("Y parity and monotonicity") {
  for (int n = 0; n <= 4; ++n)
    CHECK(std::abs(y_alpha(n, 3.0, 2.0).value - y_alpha(-n, 3.0, 2.0).value) <= 1e-12);
  double prev = INFINITY;
  for (double F = 1.2; F < 6.0; F += 0.4) {
    const double y = y_alpha(0, F, 1.0).value;
    CHECK(y < prev);
    prev = y;
  }
  CHECK_THROWS_AS(y_alpha(0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(y_alpha(0, 1.0, 2.0), DomainError);
}

TEST_CASE("axial centre of mass kills the transverse coefficients") {
  const auto k = FixedKernel::from_geometry({1.0, 0.5, 0.0, 0.0});
  const auto c = kernel_coefficients(0, 0, k);
  CHECK(c.C == cplx(0.0));
  CHECK(c.D == cplx(0.0));
  CHECK(c.I.real() == doctest::Approx(0.5 * 2 * kPi * std::pow(1.25, -1.5)).epsilon(1e-14));
}

TEST_CASE("fixed-geometry coefficients from Riemann Y values") {
  const FixedKernel k{2.0, 1.0, 1.3, 0.7, 0.4};
  const auto c = kernel_coefficients(1, 0, k);
  const double y0 = y_riemann(0, 2, 1), y1 = y_riemann(1, 2, 1), y2 = y_riemann(2, 2, 1);
  CHECK(std::abs(c.C - cplx(1.3 * y0 - 0.7 * y1)) < 1e-8);
  CHECK(std::abs(c.D - cplx(1.3 * y2 - 0.7 * y1)) < 1e-8);
  CHECK(std::abs(c.I - cplx(0.4 * y1)) < 1e-8);
  CHECK(std::abs(c.C.imag()) == 0.0);
  // the assembly identities hold exactly
  CHECK(c.C == c.kappa * c.y_minus - c.lambda * c.y_zero);
  CHECK(c.D == c.kappa * c.y_plus - c.lambda * c.y_zero);
  CHECK(c.I == c.eta * c.y_zero);
}

TEST_CASE("helicity pairing C(+1) = D(-1)") {
  for (auto [F, G] : {std::pair{2.0, 1.0}, {5.0, 3.0}, {10.0, 1.0}}) {
    const FixedKernel k{F, G, 0.9, 1.1, 0.0};
    const auto p = kernel_coefficients(1, 0, k);
    const auto m = kernel_coefficients(0, 1, k);
    CHECK(std::abs(p.C - m.D) <= 1e-12 * std::abs(p.C));
  }
}

TEST_CASE("matrix element channels") {
  const auto k = FixedKernel::from_geometry(KernelGeometry::from_fg(2.0, 1.0));
  const auto b1 = VortexBeam::electron(1, 1.0, 1.0);
  const auto b0 = VortexBeam::electron(0, 1.0, 1.0);
  const HydrogenicState s1{1, 0, 0, 1.0};

  const auto q = ev_matrix_element(b1, b0, s1, {2, 1, 1, 1.0}, kRing, kRing, k);
  CHECK(q.active_channel == EvChannel::plus);
  CHECK(q.Q != cplx(0.0));
  CHECK(q.S == cplx(0.0));
  CHECK(q.U == cplx(0.0));
  CHECK(std::abs(q.Q - q.kernel.C * q.dipole.plus) < 1e-15);

  const auto none = ev_matrix_element(b1, b0, {2, 1, -1, 1.0}, {3, 2, 1, 1.0}, kRing, kRing, k);
  CHECK(none.active_channel == EvChannel::none);
  CHECK(none.total() == cplx(0.0));

  const auto u = ev_matrix_element(b0, b0, s1, {2, 1, 0, 1.0}, kRing, kRing, k);
  CHECK(u.active_channel == EvChannel::zero);
  CHECK(u.Q == cplx(0.0));
  CHECK(u.S == cplx(0.0));
  CHECK(std::abs(u.U - u.kernel.I * u.dipole.z) < 1e-15);

  const auto s = ev_matrix_element(VortexBeam::electron(-1, 1.0, 1.0), b0, s1, {2, 1, -1, 1.0},
                                   kRing, kRing, k);
  CHECK(s.active_channel == EvChannel::minus);
  CHECK(std::abs(std::abs(s.S) - std::abs(q.Q)) <= 1e-12 * std::abs(q.Q));

  CHECK(channel_name(EvChannel::plus) == "plus");
  CHECK(channel_name(EvChannel::none) == "none");
}

TEST_CASE("angular oracle reproduces 2 pi C, D, I") {
  const auto g = KernelGeometry::from_fg(2.0, 1.0);
  const auto k = FixedKernel::from_geometry(g);
  const auto c10 = kernel_coefficients(1, 0, k);
  CHECK(std::abs(angular_oracle(1, 0, 0, 0, KernelComponent::plus, g, 96) - 2 * kPi * c10.C) < 1e-9);
  const auto c01 = kernel_coefficients(0, 1, k);
  CHECK(std::abs(angular_oracle(0, 1, 0, 0, KernelComponent::minus, g, 96) - 2 * kPi * c01.D) < 1e-9);
  const auto zg = KernelGeometry{1.0, 0.8, 0.6, 0.1};
  const auto c00 = kernel_coefficients(0, 0, FixedKernel::from_geometry(zg));
  CHECK(std::abs(angular_oracle(0, 0, 0, 0, KernelComponent::z, zg, 96) - 2 * kPi * c00.I) < 1e-9);
  // violated delta: Fourier orthogonality
  CHECK(std::abs(angular_oracle(1, 0, 1, 0, KernelComponent::plus, g, 96)) < 1e-12);
  CHECK_THROWS_AS(angular_oracle(0, 0, 0, 0, KernelComponent::z, g, 0), DomainError);
}

TEST_CASE("integrated mode converges and respects the axial symmetry") {
  IntegratedKernel k{VortexBeam::electron(1, 1.0, 1.0), VortexBeam::electron(0, 1.0, 1.0), kRing,
                     kRing};
  k.r_max = 5.0;
  k.l_z = 2.0;
  k.tube_radius = 0.25;
  k.tol = {1e-7, 1e-4, 25};
  const auto c = kernel_coefficients(1, 0, k);
  CHECK(c.converged);
  CHECK(std::abs(c.C) > 0.0);
  CHECK(std::isfinite(std::abs(c.D)));
  // equal axial momenta make the integrand odd in z_v - z_R
  CHECK(std::abs(c.I) < 1e-9);
  CHECK(std::abs(c.eta) < 1e-9);
  CHECK(c.error_estimate >= 0.0);

  k.beam_i = VortexBeam::optical(1, 1.0, 1.0);
  CHECK_THROWS_AS(kernel_coefficients(1, 0, k), DomainError);
}

} // TEST_SUITE
