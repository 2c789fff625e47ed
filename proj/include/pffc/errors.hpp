#ifndef PFFC_ERRORS_HPP_
#define PFFC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pffc {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatchError : public SolverError {
 public:
  using SolverError::SolverError;
};

// Rejected ProblemConstants (validate_constants) or schedule inputs.
class InvalidConstantsError : public SolverError {
 public:
  enum class Kind {
    NonPositiveDiameter,
    NegativeBudget,
    InconsistentG,
    NegativeBound,
    NonPositiveEpsilon,
    DegenerateConstants,
  };
  InvalidConstantsError(Kind kind, const std::string& what)
      : SolverError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// An iterative oracle failed to reach its internal tolerance.
class OracleFailureError : public SolverError {
 public:
  using SolverError::SolverError;
};

class InfeasibleError : public SolverError {
 public:
  using SolverError::SolverError;
};

class NoPathError : public SolverError {
 public:
  using SolverError::SolverError;
};

class ParseError : public SolverError {
 public:
  using SolverError::SolverError;
};

class ProjectionUnavailableError : public SolverError {
 public:
  using SolverError::SolverError;
};

class ExactMinUnavailableError : public SolverError {
 public:
  using SolverError::SolverError;
};

class WrongFormulationError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace pffc

#endif  // PFFC_ERRORS_HPP_
