#pragma once

#include <stdexcept>
#include <string>

namespace stiefel {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STIEFEL_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

STIEFEL_DEFINE_ERROR(PoleError);
STIEFEL_DEFINE_ERROR(ExcludedParamError);
STIEFEL_DEFINE_ERROR(DimensionError);
STIEFEL_DEFINE_ERROR(FrameError);
STIEFEL_DEFINE_ERROR(ConvergenceDomainError);
STIEFEL_DEFINE_ERROR(RankError);
STIEFEL_DEFINE_ERROR(DegenerateSampleError);
STIEFEL_DEFINE_ERROR(SingularKernelError);
STIEFEL_DEFINE_ERROR(StepError);
STIEFEL_DEFINE_ERROR(BernsteinZeroError);
STIEFEL_DEFINE_ERROR(QuadratureDegreeError);
STIEFEL_DEFINE_ERROR(ConfigError);

#undef STIEFEL_DEFINE_ERROR

}  // namespace stiefel
