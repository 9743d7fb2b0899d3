#ifndef FIM_ERRORS_HPP
#define FIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fim {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// An argument violated a documented precondition (bad tolerance, bad size, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string &what) : Error(what) {}
};

/// An operator polynomial has an inverse root on or outside the admissible disk.
class StationarityError : public Error {
 public:
  explicit StationarityError(const std::string &what) : Error(what) {}
};

/// A numerical routine failed to reach its accuracy contract
/// (root finder divergence, reconstruction above tolerance, series cap hit, ...).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string &what) : Error(what) {}
};

/// A value-level precondition failed, e.g. deflating by a non-root.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string &what) : Error(what) {}
};

}  // namespace fim

#endif  // FIM_ERRORS_HPP
