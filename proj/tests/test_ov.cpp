#include "doctest.h"
#include "oracles.hpp"

#include "vortex/errors.hpp"
#include "vortex/ov_coupling.hpp"

#include <cmath>
#include <numbers>

using namespace vortex;
using namespace vortex::ov;
using matter::ComState;
using matter::HydrogenicState;
using matter::PhotonOccupation;

namespace {
constexpr double kPi = std::numbers::pi;
const HydrogenicState s1s{1, 0, 0, 1.0};
} // namespace

TEST_SUITE("ov") {

TEST_CASE("dipole 1s -> 2p0 matches closed form and cubature") {
  const auto d = dipole_matrix_element(s1s, {2, 1, 0, 1.0});
  CHECK(d.z.real() == doctest::Approx(128.0 * std::sqrt(2.0) / 243.0).epsilon(1e-12));
  CHECK(d.plus == cplx(0.0));
  CHECK(d.minus == cplx(0.0));
  const auto o = oracle::dipole_1s_2p(0);
  CHECK(std::abs(d.z - o.z) < 1e-8);
}

TEST_CASE("dipole 1s -> 2p+1 selects the plus component") {
  const auto d = dipole_matrix_element(s1s, {2, 1, 1, 1.0});
  CHECK(d.plus != cplx(0.0));
  CHECK(d.z == cplx(0.0));
  CHECK(d.minus == cplx(0.0));
  const auto o = oracle::dipole_1s_2p(1);
  CHECK(std::abs(d.plus - o.plus) < 1e-8);
  CHECK(std::abs(o.minus) < 1e-10);
}

TEST_CASE("forbidden dipoles are exact zeros") {
  const auto d = dipole_matrix_element(s1s, {2, 0, 0, 1.0});
  CHECK(d.plus == cplx(0.0));
  CHECK(d.minus == cplx(0.0));
  CHECK(d.z == cplx(0.0));
  const auto e = dipole_matrix_element({2, 1, 1, 1.0}, {2, 1, 1, 1.0});
  CHECK(e.z == cplx(0.0));
  const auto f = dipole_matrix_element({2, 1, -1, 1.0}, {3, 2, 1, 1.0});
  CHECK(f.plus == cplx(0.0));
  CHECK_THROWS_AS(dipole_matrix_element(s1s, {2, 1, 0, 0.5}), DomainError);
}

TEST_CASE("azimuthal delta") {
  CHECK(azimuthal_delta(0) == 2 * kPi);
  CHECK(azimuthal_delta(3) == 0.0);
  CHECK(azimuthal_delta(-1) == 0.0);
}

TEST_CASE("centre-of-mass and photon factor") {
  const auto beam = beams::VortexBeam::optical(1, 1.0, 0.8);
  const auto ci = ComState::ring(0, 0.0, 0.2, 1.8, 0.4);
  const auto cf = ComState::ring(1, 0.0, 1.0, 1.8, 0.4);
  const auto a = ov_com_photon_factor(beam, ci, cf, {2}, {1}, Channel::absorption);
  CHECK(a.delta_L_satisfied);
  CHECK(a.delta_n_satisfied);
  CHECK(std::abs(a.kz_mismatch) < 1e-15);
  CHECK(std::abs(a.amplitude) > 1e-3);

  const auto far = ComState::ring(2, 0.0, 1.0, 1.8, 0.4);
  const auto z = ov_com_photon_factor(beam, ci, far, {2}, {1}, Channel::absorption);
  CHECK_FALSE(z.delta_L_satisfied);
  CHECK(z.amplitude == cplx(0.0));

  // emission back down: sqrt(n_i + 1) instead of sqrt(n_i)
  const auto e = ov_com_photon_factor(beam, cf, ci, {1}, {2}, Channel::emission);
  CHECK(e.delta_L_satisfied);
  CHECK(std::abs(e.amplitude) / std::abs(a.amplitude) == doctest::Approx(1.0).epsilon(1e-10));
  const auto e3 = ov_com_photon_factor(beam, cf, ci, {3}, {4}, Channel::emission);
  CHECK(std::abs(e3.amplitude) / std::abs(e.amplitude) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  // axial window: finite-length mismatch suppresses the amplitude
  const auto off = ComState::ring(1, 0.0, 1.3, 1.8, 0.4);
  const auto w = ov_com_photon_factor(beam, ci, off, {2}, {1}, Channel::absorption);
  const double lz = 2 * kPi / 0.8, dk = 0.3;
  CHECK(w.axial_window == doctest::Approx(std::sin(dk * lz / 2) / (dk / 2)).epsilon(1e-12));
}

TEST_CASE("radial overlap against the midpoint oracle") {
  const auto ci = ComState::ring(0, 0.3, 0.0, 1.8, 0.4);
  const auto cf = ComState::ring(1, 0.5, 0.0, 1.8, 0.4);
  const auto r = radial_overlap(ci, cf, 1, 1.0, {1e-13, 1e-11, 40});
  const auto ref = quad::riemann_oracle(
      [&](double rho) {
        return std::conj(cf.radial(rho)) * std::cyl_bessel_j(1.0, rho) * ci.radial(rho) * rho;
      },
      0.0, std::min(ci.support(), cf.support()), 1000000);
  CHECK(std::abs(r.value - ref) < 1e-8);
}

TEST_CASE("full matrix element") {
  const auto ci = ComState::ring(0, 0.0, 0.0, 1.8, 0.4);
  const auto cf = ComState::ring(1, 0.0, 1.0, 1.8, 0.4);
  const auto xbeam = beams::VortexBeam::optical(1, 1.0, 1.0);
  CHECK(ov_matrix_element(xbeam, s1s, {2, 1, 0, 1.0}, ci, cf, {1}, {0}).value == cplx(0.0));
  CHECK(ov_matrix_element(xbeam, {2, 1, 1, 1.0}, {2, 1, 1, 1.0}, ci, cf, {1}, {0}).value == cplx(0.0));
  const auto m = ov_matrix_element(xbeam, s1s, {2, 1, 1, 1.0}, ci, cf, {1}, {0});
  CHECK(std::abs(m.value) > 1e-4);
  CHECK(m.prefactor.imag() == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(m.converged);
  // the product structure
  CHECK(std::abs(m.value - m.prefactor * m.projected_dipole * m.com_photon.amplitude) < 1e-16);
}

} // TEST_SUITE
