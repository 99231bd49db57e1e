#pragma once

#include <string>
#include <vector>

#include "tep/market/types.hpp"

namespace tep::net {

struct Violation {
  std::string code;     // stable machine-readable tag
  std::string message;  // human-readable detail
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Structural checks on a full instance. Never throws: problems are report
// entries. An empty report means the instance is safe for every operation in
// the library.
ValidationReport validate_instance(const market::Instance& instance);

}  // namespace tep::net
