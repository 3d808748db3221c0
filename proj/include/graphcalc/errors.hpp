#pragma once

#include <stdexcept>
#include <string>

namespace graphcalc {

// Base class for all library errors. name() is the stable class identifier
// used in CLI messages and verify-report notes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    virtual const char* name() const noexcept { return "Error"; }
};

#define GRAPHCALC_DEFINE_ERROR(Name)                                           \
    class Name : public Error {                                                \
      public:                                                                  \
        using Error::Error;                                                    \
        const char* name() const noexcept override { return #Name; }           \
    }

// graph construction
GRAPHCALC_DEFINE_ERROR(NonPositiveWeight);
GRAPHCALC_DEFINE_ERROR(SelfLoopEdge);
GRAPHCALC_DEFINE_ERROR(DuplicateEdge);
GRAPHCALC_DEFINE_ERROR(IndexOutOfRange);
GRAPHCALC_DEFINE_ERROR(IsolatedNode);
GRAPHCALC_DEFINE_ERROR(AsymmetricScores);
GRAPHCALC_DEFINE_ERROR(NotReversible);
GRAPHCALC_DEFINE_ERROR(AsymmetricSupport);

// operator evaluation
GRAPHCALC_DEFINE_ERROR(DimensionMismatch);
GRAPHCALC_DEFINE_ERROR(InvalidP);
GRAPHCALC_DEFINE_ERROR(NegativeOrder);

// spectral / dynamics
GRAPHCALC_DEFINE_ERROR(NumericalFailure);
GRAPHCALC_DEFINE_ERROR(DisconnectedGraph);
GRAPHCALC_DEFINE_ERROR(PreconditionViolated);
GRAPHCALC_DEFINE_ERROR(NegativeTime);
GRAPHCALC_DEFINE_ERROR(UnstableStep);
GRAPHCALC_DEFINE_ERROR(NotSubStochastic);
GRAPHCALC_DEFINE_ERROR(ConstantInitialCondition);

// gnn simulation
GRAPHCALC_DEFINE_ERROR(InvalidDims);
GRAPHCALC_DEFINE_ERROR(InsufficientData);
GRAPHCALC_DEFINE_ERROR(AllZeroEnergies);

// file ingestion
GRAPHCALC_DEFINE_ERROR(MissingMeasure);
GRAPHCALC_DEFINE_ERROR(IoError);

#undef GRAPHCALC_DEFINE_ERROR

// Parse failure carrying the 1-based line number of the offending line
// (0 when no single line is to blame).
class ParseError : public Error {
  public:
    ParseError(const std::string& what, long line)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                         : what),
          line_(line) {}
    long line() const { return line_; }
    const char* name() const noexcept override { return "ParseError"; }

  private:
    long line_;
};

}  // namespace graphcalc
