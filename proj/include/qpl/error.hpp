#pragma once

#include <stdexcept>
#include <string>

namespace qpl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QPL_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

QPL_DEFINE_ERROR(InvalidParams)
QPL_DEFINE_ERROR(SingularMatrix)
QPL_DEFINE_ERROR(IncomparableFamilies)
QPL_DEFINE_ERROR(TieOnLeadingWord)
QPL_DEFINE_ERROR(NotConfluent)
QPL_DEFINE_ERROR(NotQuadratic)
QPL_DEFINE_ERROR(GeneratorMismatch)
QPL_DEFINE_ERROR(ShapeMismatch)
QPL_DEFINE_ERROR(Undefined)
QPL_DEFINE_ERROR(OutOfRange)
QPL_DEFINE_ERROR(InconsistentPresentation)
QPL_DEFINE_ERROR(ParseError)
QPL_DEFINE_ERROR(OracleMismatch)

#undef QPL_DEFINE_ERROR

}  // namespace qpl
