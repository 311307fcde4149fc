#pragma once

#include <stdexcept>
#include <string>

namespace pgs {

// Every error raised by the toolkit derives from Error. The CLI maps
// InputError to exit status 2 and ResourceLimit to exit status 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class BadParameters : public InputError {
 public:
  using InputError::InputError;
};

class NotNormal : public InputError {
 public:
  using InputError::InputError;
};

class NotCentral : public InputError {
 public:
  using InputError::InputError;
};

class WrongOrder : public InputError {
 public:
  using InputError::InputError;
};

class NotInGroup : public InputError {
 public:
  using InputError::InputError;
};

class PthPowerViolation : public InputError {
 public:
  using InputError::InputError;
};

class NotInvertible : public InputError {
 public:
  using InputError::InputError;
};

class ExponentTooSmall : public InputError {
 public:
  using InputError::InputError;
};

// Raised by a verifier whose hypotheses do not hold for the given input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParameterTooLarge : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

// Signals a broken internal invariant, never a user mistake.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace pgs
