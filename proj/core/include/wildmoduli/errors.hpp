#pragma once

#include <stdexcept>
#include <string>

namespace wildmoduli {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix sizes or vector lengths disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Jet truncation orders disagree.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Residue data does not refine the block structure of an irregular type.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A numerical rank decision fell inside the ambiguity band; perturb the input.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Coefficients that must be distinct collided.
class DistinctnessError : public Error {
 public:
  using Error::Error;
};

/// An operation precondition is violated (non-regular class, resonant residues, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A randomized sampler exhausted its retry budget.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Not enough independent samples to determine a fit.
class UnderdeterminedError : public Error {
 public:
  using Error::Error;
};

/// A fitted relation fails validation.
class FitError : public Error {
 public:
  using Error::Error;
};

/// Integration path passes too close to a pole, or poles nearly collide.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Requested feature is outside the supported range.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input. `pointer()` is a JSON pointer to the offending node.
class InputError : public Error {
 public:
  InputError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace wildmoduli
