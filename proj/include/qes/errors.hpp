#pragma once

#include <stdexcept>
#include <string>

namespace qes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial left the representation space P_n.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Rejected family parameters or malformed algebra data.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// No interval on which B4 > 0, or the requested one is unusable.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a non-removable zero of B4.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// Requested point lies outside the domain of a mapping or potential.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NoBoundStateError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Bad grid or eigensolver request in the finite-difference oracle.
class GridError : public Error {
 public:
  using Error::Error;
};

}  // namespace qes
