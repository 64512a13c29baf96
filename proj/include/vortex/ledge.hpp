#pragma once

#include "vortex/ev_coupling.hpp"
#include "vortex/matter.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vortex::ledge {

using matter::CoreState;
using matter::Shell;

enum class Edge { L2, L3 };

std::string edge_name(Edge e);
Shell initial_shell(Edge e);
Shell final_shell(Edge e);

struct EdgeTransition {
  Edge edge = Edge::L2;
  CoreState initial;
  CoreState final_state;
  int beam_l = 1;
  double strength = 0.0;
};

//! 2 L2 and 4 L3 transitions with Delta m_j = beam_l, in table order
//! (L2 first, ascending initial m_j). Throws DomainError unless beam_l = +-1.
std::vector<EdgeTransition> enumerate_edge_transitions(int beam_l);

/// |<j' m_j'| T^1_q | j m_j>|^2 through the Wigner-Eckart theorem with the
/// reduced (radial) element set to `radial_element`; q is the change in m_j.
double transition_strength(const EdgeTransition &t, double radial_element = 1.0);

class DensityOfStates {
public:
  void set(Shell shell, int two_mj, double weight);
  //! Throws DomainError if the entry is missing.
  double at(Shell shell, int two_mj) const;
  bool contains(Shell shell, int two_mj) const;
  const std::map<std::pair<Shell, int>, double> &weights() const { return weights_; }

  //! Every final-shell m_j (3d3/2 and 3d5/2) set to `weight`.
  static DensityOfStates uniform(double weight = 1.0);
  //! weight(m_j) from a callable on the real m_j value
  template <class Fn> static DensityOfStates from_function(Fn &&fn) {
    DensityOfStates d;
    for (Shell s : {Shell::d_threehalf, Shell::d_fivehalf})
      for (const auto &c : matter::enumerate_core_states(s))
        d.set(s, c.two_mj, fn(0.5 * c.two_mj));
    return d;
  }
  //! The same weights with m_j -> -m_j.
  DensityOfStates reflected() const;
  DensityOfStates scaled(double c) const;

private:
  std::map<std::pair<Shell, int>, double> weights_;
};

/// Coupling constants entering the rate for each beam sign: |C|^2 for
/// l = +1 and |D|^2 for l = -1, both evaluated with l' = 0.
struct HelicityCoupling {
  std::complex<double> C_plus{1.0};
  std::complex<double> D_minus{1.0};

  //! |C| = |D| = 1: reproduces the selection-rule logic alone.
  static HelicityCoupling selection_rule_mode();
  static HelicityCoupling from_kernel(const ev::FixedKernel &k);
};

struct LedgeSettings {
  double radial_element = 1.0;
};

//! (2 pi / hbar) |C|^2 or |D|^2 times sum of strength * dos(final).
double edge_rate(Edge edge, int beam_l, const DensityOfStates &dos,
                 const HelicityCoupling &coupling, const LedgeSettings &settings = {});

struct DichroismResult {
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
  double dichroism = 0.0;
  //! edge -> (rate for l = +1, rate for l = -1)
  std::map<Edge, std::pair<double, double>> per_edge;
};

DichroismResult dichroism(const DensityOfStates &dos, const HelicityCoupling &coupling,
                          const LedgeSettings &settings = {});

} // namespace vortex::ledge
