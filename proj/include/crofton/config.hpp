#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crofton/estimators.hpp"

namespace crofton {

// Declarative description of one run, parsed from a flat key = value
// document (see README for the schema). Validated against the index
// constraints of the chosen mode/design before any computation.
struct ExperimentConfig {
  std::string mode = "estimate";  // estimate | verify | convergence
  Design design = Design::Rotational;
  PhiRoute route = PhiRoute::Generic;
  Indices idx;
  std::optional<ConvexBody> body;
  std::vector<Vec> l0_basis;  // r vectors; empty when r = 0
  long long outer_samples = 100000;
  long long inner_samples = 64;
  long long budget = 1000000;  // verify / convergence total
  std::uint64_t seed = 0;
  double reference_radius = 0.0;
  std::vector<std::string> checks;  // verify subset; empty = full battery
  std::string out_path;
  std::string body_tag;

  Subspace fixed_subspace() const;  // orthonormalized L0 basis
  EstimatorSpec estimator_spec() const;
};

// Parses and fully validates a config document; throws config_error with
// the offending key and the violated constraint.
ExperimentConfig parse_config(const std::string& text);

ExperimentConfig parse_config_file(const std::string& path);

}  // namespace crofton
