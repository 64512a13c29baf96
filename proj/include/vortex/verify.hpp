#pragma once

#include <string>
#include <vector>

namespace vortex::cli {

struct PropertyCheck {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

//! Every module invariant, evaluated on fixed-seed samples. Deterministic.
std::vector<PropertyCheck> run_invariant_suite();

} // namespace vortex::cli
