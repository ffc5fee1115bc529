#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace contrapunctus {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values live on different carriers (or in different worlds).
class IncompatibleObjects : public Error {
 public:
  using Error::Error;
};

/// Parameters do not describe a morphism of the world, or a non-iso was
/// requested where an isomorphism is required.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this kind of world.
class UnsupportedWorld : public Error {
 public:
  using Error::Error;
};

/// Shape problems such as an odd carrier for a dichotomy query.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of the operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed; `token()` is the offending fragment.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string token)
      : Error(what + ": '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A counterpoint context needs a unique polarity but the dichotomy admits
/// several quasipolarities (or none). Carries the formatted witnesses.
class NonStrongDichotomy : public Error {
 public:
  NonStrongDichotomy(const std::string& what, std::vector<std::string> witnesses)
      : Error(what), witnesses_(std::move(witnesses)) {}
  const std::vector<std::string>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

}  // namespace contrapunctus
