#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellwin {

/// Base class for every error raised by the solver stack.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bessel or Mathieu order outside the supported table.
class UnsupportedOrder : public Error {
public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function (e.g. K_m at x <= 0).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A precondition on arguments was violated by the caller.
class UsageError : public Error {
public:
  using Error::Error;
};

/// Window given with b > a; the elliptic basis needs the major axis along x.
class OrientationError : public Error {
public:
  using Error::Error;
};

/// a == b: elliptic coordinates are singular, use the circular solver.
class DegenerateCircle : public Error {
public:
  using Error::Error;
};

/// Characteristic value did not settle while the recurrence matrix was grown.
class TruncationFailure : public Error {
public:
  TruncationFailure(const std::string &what, double previous, double last)
      : Error(what), previous_(previous), last_(last) {}
  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

private:
  double previous_;
  double last_;
};

/// Ce_m(r0, q) vanished at the trial energy, so its log-derivative has a pole.
class PoleAtTrialEnergy : public Error {
public:
  PoleAtTrialEnergy(const std::string &what, double energy, int mode)
      : Error(what), energy_(energy), mode_(mode) {}
  double energy() const noexcept { return energy_; }
  int mode() const noexcept { return mode_; }

private:
  double energy_;
  int mode_;
};

/// Adaptive ODE integration could not keep the step above its floor.
class IntegrationFailure : public Error {
public:
  IntegrationFailure(const std::string &what, double position, double step)
      : Error(what), position_(position), step_(step) {}
  double position() const noexcept { return position_; }
  double step() const noexcept { return step_; }

private:
  double position_;
  double step_;
};

/// Power iteration did not reach its tolerance.
class IterationFailure : public Error {
public:
  IterationFailure(const std::string &what, std::vector<double> residuals)
      : Error(what), residuals_(std::move(residuals)) {}
  const std::vector<double> &residuals() const noexcept { return residuals_; }

private:
  std::vector<double> residuals_;
};

} // namespace ellwin
