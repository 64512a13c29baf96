#include "doctest.h"
#include "edge_table.hpp"
#include "oracles.hpp"

#include "vortex/errors.hpp"
#include "vortex/ledge.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace vortex;
using namespace vortex::ledge;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::set<reference::EdgeRow> produced_rows() {
  std::set<reference::EdgeRow> out;
  for (int l : {1, -1})
    for (const auto &t : enumerate_edge_transitions(l))
      out.emplace(edge_name(t.edge), matter::shell_name(t.initial.shell), t.initial.two_mj,
                  matter::shell_name(t.final_state.shell), t.final_state.two_mj, t.beam_l);
  return out;
}
} // namespace

TEST_SUITE("ledge") {

TEST_CASE("the twelve transitions") {
  const std::set<reference::EdgeRow> expected(reference::kEdgeTable.begin(),
                                              reference::kEdgeTable.end());
  CHECK(produced_rows() == expected);
  for (int l : {1, -1}) {
    const auto ts = enumerate_edge_transitions(l);
    REQUIRE(ts.size() == 6);
    int l2 = 0;
    for (const auto &t : ts) {
      l2 += t.edge == Edge::L2;
      CHECK(t.final_state.two_mj - t.initial.two_mj == 2 * l);
    }
    CHECK(l2 == 2);
  }
  CHECK_THROWS_AS(enumerate_edge_transitions(0), DomainError);
  CHECK_THROWS_AS(enumerate_edge_transitions(2), DomainError);
}

TEST_CASE("strengths") {
  const auto ts = enumerate_edge_transitions(1);
  const double expect[] = {1.0 / 12, 1.0 / 4, 1.0 / 60, 1.0 / 20, 1.0 / 10, 1.0 / 6};
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(ts[i].strength == doctest::Approx(expect[i]).epsilon(1e-14));

  for (const auto &p : ts) {
    const EdgeTransition mirror{p.edge,
                                {p.initial.shell, -p.initial.two_mj},
                                {p.final_state.shell, -p.final_state.two_mj},
                                -1};
    CHECK(std::abs(transition_strength(mirror) - p.strength) <= 1e-12);
  }

  const EdgeTransition two{Edge::L3, {Shell::p_threehalf, -3}, {Shell::d_fivehalf, 1}, 1};
  CHECK(transition_strength(two) == 0.0);
  CHECK(transition_strength(ts[0], 2.0) == doctest::Approx(4.0 * ts[0].strength).epsilon(1e-14));
}

TEST_CASE("strengths follow the spinor-harmonic cubature") {
  // |<l'=2 j' m'| Y_1^q |l=1 j m>|^2 / strength must be one constant per edge
  for (Edge edge : {Edge::L2, Edge::L3}) {
    double lo = INFINITY, hi = 0.0;
    for (int l : {1, -1})
      for (const auto &t : enumerate_edge_transitions(l)) {
        if (t.edge != edge)
          continue;
        const auto e = oracle::spinor_element(2, matter::two_j(t.final_state.shell),
                                              t.final_state.two_mj, 1,
                                              matter::two_j(t.initial.shell), t.initial.two_mj, l);
        const double ratio = std::norm(e) / t.strength;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    CHECK(hi > 0.0);
    CHECK((hi - lo) / hi < 1e-9);
  }
}

TEST_CASE("density of states") {
  DensityOfStates d;
  CHECK_THROWS_AS(d.at(Shell::d_threehalf, 1), DomainError);
  CHECK_THROWS_AS(d.set(Shell::d_threehalf, 1, -0.5), DomainError);
  CHECK_THROWS_AS(d.set(Shell::d_threehalf, 5, 1.0), DomainError);
  d.set(Shell::d_threehalf, 3, 2.0);
  CHECK(d.contains(Shell::d_threehalf, 3));
  CHECK(d.reflected().at(Shell::d_threehalf, -3) == 2.0);
  CHECK(d.scaled(0.5).at(Shell::d_threehalf, 3) == 1.0);
  CHECK(DensityOfStates::uniform(0.3).weights().size() == 10);
}

TEST_CASE("rates") {
  const auto unit = HelicityCoupling::selection_rule_mode();
  const auto sym = DensityOfStates::from_function([](double mj) { return 1.0 + mj * mj; });
  for (Edge e : {Edge::L2, Edge::L3}) {
    const double p = edge_rate(e, 1, sym, unit), m = edge_rate(e, -1, sym, unit);
    CHECK(std::abs(p - m) <= 1e-10 * p);
  }
  CHECK(edge_rate(Edge::L3, 1, DensityOfStates::uniform(0.0), unit) == 0.0);

  // a single occupied level: one term for l = +1, none for l = -1
  auto one = DensityOfStates::uniform(0.0);
  one.set(Shell::d_threehalf, 3, 1.0);
  CHECK(edge_rate(Edge::L2, 1, one, unit) == doctest::Approx(kTwoPi * 0.25).epsilon(1e-14));
  CHECK(edge_rate(Edge::L2, -1, one, unit) == 0.0);

  DensityOfStates partial;
  partial.set(Shell::d_threehalf, 1, 1.0);
  CHECK_THROWS_AS(edge_rate(Edge::L2, 1, partial, unit), DomainError);
}

TEST_CASE("dichroism") {
  const auto k = HelicityCoupling::from_kernel(
      ev::FixedKernel::from_geometry(ev::KernelGeometry::from_fg(2.0, 1.0)));
  CHECK(std::abs(std::abs(k.C_plus) - std::abs(k.D_minus)) <= 1e-12 * std::abs(k.C_plus));

  const auto sym = dichroism(DensityOfStates::uniform(1.0), k);
  CHECK(std::abs(sym.dichroism) <= 1e-10 * (sym.gamma_plus + sym.gamma_minus));

  auto one = DensityOfStates::uniform(0.0);
  one.set(Shell::d_threehalf, 3, 1.0);
  const auto single = dichroism(one, k);
  const double hand = kTwoPi * std::norm(k.C_plus) * 0.25;
  CHECK(single.dichroism == doctest::Approx(hand).epsilon(1e-12));
  CHECK(single.dichroism > 0.0);

  const auto ramp = DensityOfStates::from_function([](double mj) { return std::max(0.0, mj); });
  const auto r = dichroism(ramp, k);
  CHECK(r.dichroism > 0.0);
  CHECK(r.dichroism == doctest::Approx(r.gamma_plus - r.gamma_minus).epsilon(1e-15));
  CHECK(dichroism(ramp.reflected(), k).dichroism == doctest::Approx(-r.dichroism).epsilon(1e-12));
  CHECK(dichroism(ramp.scaled(3.0), k).dichroism == doctest::Approx(3.0 * r.dichroism).epsilon(1e-12));
  CHECK(r.per_edge.size() == 2);
}

} // TEST_SUITE
