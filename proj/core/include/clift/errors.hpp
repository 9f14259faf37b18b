#pragma once

#include <stdexcept>
#include <string>

namespace clift {

// Thrown when an adaptive quadrature or series truncation exhausts its
// budget before meeting the requested tolerance. Carries the best estimate
// so callers can decide whether to keep going with a flagged value.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double err_estimate)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        err_estimate_(err_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double err_estimate() const { return err_estimate_; }

private:
  double best_estimate_;
  double err_estimate_;
};

} // namespace clift
