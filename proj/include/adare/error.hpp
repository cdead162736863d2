#pragma once

#include <stdexcept>

namespace adare {

// File and serialization failures. Contract violations use
// std::invalid_argument; internal inconsistencies use std::logic_error.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace adare
