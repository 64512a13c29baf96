#include "vortex/ledge.hpp"
#include "vortex/errors.hpp"
#include "vortex/specfun.hpp"

#include <cmath>
#include <numbers>

namespace vortex::ledge {

std::string edge_name(Edge e) { return e == Edge::L2 ? "L2" : "L3"; }

Shell initial_shell(Edge e) {
  return e == Edge::L2 ? Shell::p_half : Shell::p_threehalf;
}

Shell final_shell(Edge e) {
  return e == Edge::L2 ? Shell::d_threehalf : Shell::d_fivehalf;
}

std::vector<EdgeTransition> enumerate_edge_transitions(int beam_l) {
  if (beam_l != 1 && beam_l != -1)
    throw DomainError("enumerate_edge_transitions: beam l must be +1 or -1");
  std::vector<EdgeTransition> out;
  for (Edge edge : {Edge::L2, Edge::L3}) {
    const int final_two_j = matter::two_j(final_shell(edge));
    for (const auto &init : matter::enumerate_core_states(initial_shell(edge))) {
      const int two_mf = init.two_mj + 2 * beam_l;
      if (std::abs(two_mf) > final_two_j)
        continue;
      EdgeTransition t;
      t.edge = edge;
      t.initial = init;
      t.final_state = {final_shell(edge), two_mf};
      t.beam_l = beam_l;
      t.strength = transition_strength(t);
      out.push_back(t);
    }
  }
  return out;
}

double transition_strength(const EdgeTransition &t, double radial_element) {
  t.initial.validate();
  t.final_state.validate();
  const int two_q = t.final_state.two_mj - t.initial.two_mj;
  if (std::abs(two_q) > 2)
    return 0.0;
  // <j' m'| T^1_q |j m> = (-1)^{j'-m'} (j' 1 j; -m' q m) <j'||T||j>
  const double w = specfun::wigner_3j(
      {matter::two_j(t.final_state.shell), -t.final_state.two_mj}, {2, two_q},
      {matter::two_j(t.initial.shell), t.initial.two_mj});
  return w * w * radial_element * radial_element;
}

void DensityOfStates::set(Shell shell, int two_mj, double weight) {
  matter::CoreState{shell, two_mj}.validate();
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw DomainError("density of states: weights must be finite and non-negative");
  weights_[{shell, two_mj}] = weight;
}

double DensityOfStates::at(Shell shell, int two_mj) const {
  const auto it = weights_.find({shell, two_mj});
  if (it == weights_.end())
    throw DomainError("density of states: missing entry for " +
                      matter::shell_name(shell) + " m_j=" +
                      std::to_string(two_mj) + "/2");
  return it->second;
}

bool DensityOfStates::contains(Shell shell, int two_mj) const {
  return weights_.count({shell, two_mj}) != 0;
}

DensityOfStates DensityOfStates::uniform(double weight) {
  return from_function([weight](double) { return weight; });
}

DensityOfStates DensityOfStates::reflected() const {
  DensityOfStates d;
  for (const auto &[key, w] : weights_)
    d.weights_[{key.first, -key.second}] = w;
  return d;
}

DensityOfStates DensityOfStates::scaled(double c) const {
  DensityOfStates d;
  for (const auto &[key, w] : weights_)
    d.set(key.first, key.second, c * w);
  return d;
}

HelicityCoupling HelicityCoupling::selection_rule_mode() { return {1.0, 1.0}; }

HelicityCoupling HelicityCoupling::from_kernel(const ev::FixedKernel &k) {
  return {ev::kernel_coefficients(1, 0, k).C, ev::kernel_coefficients(-1, 0, k).D};
}

double edge_rate(Edge edge, int beam_l, const DensityOfStates &dos,
                 const HelicityCoupling &coupling, const LedgeSettings &settings) {
  for (const auto &s : matter::enumerate_core_states(final_shell(edge)))
    dos.at(s.shell, s.two_mj);
  const double c2 = std::norm(beam_l == 1 ? coupling.C_plus : coupling.D_minus);
  double sum = 0.0;
  for (const auto &t : enumerate_edge_transitions(beam_l)) {
    if (t.edge != edge)
      continue;
    sum += transition_strength(t, settings.radial_element) *
           dos.at(t.final_state.shell, t.final_state.two_mj);
  }
  return 2.0 * std::numbers::pi * c2 * sum;
}

DichroismResult dichroism(const DensityOfStates &dos, const HelicityCoupling &coupling,
                          const LedgeSettings &settings) {
  DichroismResult out;
  for (Edge edge : {Edge::L2, Edge::L3}) {
    const double plus = edge_rate(edge, 1, dos, coupling, settings);
    const double minus = edge_rate(edge, -1, dos, coupling, settings);
    out.per_edge[edge] = {plus, minus};
    out.gamma_plus += plus;
    out.gamma_minus += minus;
  }
  out.dichroism = out.gamma_plus - out.gamma_minus;
  return out;
}

} // namespace vortex::ledge
