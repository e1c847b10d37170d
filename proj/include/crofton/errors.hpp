#pragma once

#include <stdexcept>
#include <string>

namespace crofton {

// Input whose numerical rank is too low for the requested operation.
struct degenerate_input : std::runtime_error {
  explicit degenerate_input(const std::string& what) : std::runtime_error(what) {}
};

// Requested functional has no implemented (exact or MC) evaluation route.
struct not_available : std::runtime_error {
  explicit not_available(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or constraint-violating experiment configuration.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crofton
