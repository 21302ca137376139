#ifndef LOGITFP_ERRORS_HPP
#define LOGITFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logitfp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain where a real result exists.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A root finder or threshold search did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// e^{beta*dsp} leaves the representable range; use asymptotic_limits instead.
class LargeBetaError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace logitfp

#endif  // LOGITFP_ERRORS_HPP
