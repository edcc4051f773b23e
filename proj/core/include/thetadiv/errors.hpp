#pragma once

#include <stdexcept>

namespace thetadiv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPeriodMatrix : Error { using Error::Error; };
struct PrecisionUnreachable : Error { using Error::Error; };
struct NotOnTheta : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct LeftSiegelSpace : Error { using Error::Error; };
struct OddDimension : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct UnsupportedKernelDimension : Error { using Error::Error; };
struct UnsupportedPower : Error { using Error::Error; };
struct DegreeOverflow : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct CertificateFailure : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace thetadiv
