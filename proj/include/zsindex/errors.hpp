#pragma once

#include <stdexcept>
#include <string>

namespace zsindex {

// Base for every error raised by the library. The concrete type names the
// violated contract; what() carries the offending values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ZSINDEX_DEFINE_ERROR(Name)                 \
  class Name : public Error {                      \
   public:                                         \
    explicit Name(const std::string& what)         \
        : Error(std::string(#Name ": ") + what) {} \
  };

ZSINDEX_DEFINE_ERROR(InvalidModulus)
ZSINDEX_DEFINE_ERROR(NotAUnit)
ZSINDEX_DEFINE_ERROR(InvalidSequence)
ZSINDEX_DEFINE_ERROR(LengthTooLarge)
ZSINDEX_DEFINE_ERROR(NotAPrimeDivisor)
ZSINDEX_DEFINE_ERROR(NotMinimal)
ZSINDEX_DEFINE_ERROR(PreconditionViolated)
ZSINDEX_DEFINE_ERROR(NoCoprimeElement)
ZSINDEX_DEFINE_ERROR(InvariantViolated)
ZSINDEX_DEFINE_ERROR(SNotLargeEnough)
ZSINDEX_DEFINE_ERROR(CeilMismatch)
ZSINDEX_DEFINE_ERROR(HypothesisViolated)
ZSINDEX_DEFINE_ERROR(WrongPattern)
ZSINDEX_DEFINE_ERROR(CacheConfigMismatch)
ZSINDEX_DEFINE_ERROR(UsageError)

#undef ZSINDEX_DEFINE_ERROR

}  // namespace zsindex
