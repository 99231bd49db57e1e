#pragma once

#include <stdexcept>
#include <string>

namespace tep {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure or resource exhaustion inside the LP solver.
class LpError : public Error {
 public:
  explicit LpError(const std::string& what) : Error(what) {}
};

// Branch-and-bound failure; carries the incumbent objective if one exists.
class MilpError : public Error {
 public:
  MilpError(const std::string& what, bool has_incumbent, double incumbent)
      : Error(what), has_incumbent_(has_incumbent), incumbent_(incumbent) {}
  bool has_incumbent() const { return has_incumbent_; }
  double incumbent() const { return incumbent_; }

 private:
  bool has_incumbent_ = false;
  double incumbent_ = 0.0;
};

}  // namespace tep
