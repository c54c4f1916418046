#ifndef ANTISUB_ERRORS_HPP
#define ANTISUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace antisub {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define ANTISUB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
  public:                                                            \
    using Error::Error;                                              \
    const char* kind() const noexcept override { return #Name; }     \
  }

ANTISUB_DEFINE_ERROR(DimensionMismatch);
ANTISUB_DEFINE_ERROR(DegenerateRestriction);
ANTISUB_DEFINE_ERROR(DegenerateMetric);
ANTISUB_DEFINE_ERROR(DegeneratePlane);
ANTISUB_DEFINE_ERROR(TableMismatch);
ANTISUB_DEFINE_ERROR(InvalidStructure);
ANTISUB_DEFINE_ERROR(NotSubalgebra);
ANTISUB_DEFINE_ERROR(NotAdInvariant);
ANTISUB_DEFINE_ERROR(UnknownId);
ANTISUB_DEFINE_ERROR(SamplingFailure);
ANTISUB_DEFINE_ERROR(ScenarioFormatError);

#undef ANTISUB_DEFINE_ERROR

}  // namespace antisub

#endif  // ANTISUB_ERRORS_HPP
