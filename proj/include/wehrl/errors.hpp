#pragma once

#include <stdexcept>
#include <string>

namespace wehrl {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WEHRL_DEFINE_ERROR(Name)        \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

WEHRL_DEFINE_ERROR(NotAdmissible);      // λ <= p - 1
WEHRL_DEFINE_ERROR(NonTelescoping);     // Gamma ratio does not reduce to a rational
WEHRL_DEFINE_ERROR(UnsupportedCase);    // c_G requested for an unclassifiable triple
WEHRL_DEFINE_ERROR(NonIntegrable);
WEHRL_DEFINE_ERROR(MethodUnsupported);
WEHRL_DEFINE_ERROR(OutsideBergman);
WEHRL_DEFINE_ERROR(NoConvergence);
WEHRL_DEFINE_ERROR(GridTooCoarse);
WEHRL_DEFINE_ERROR(PiPowerMismatch);
WEHRL_DEFINE_ERROR(ConfigError);

#undef WEHRL_DEFINE_ERROR

}  // namespace wehrl
