#ifndef PRIMSPEC_ERRORS_HPP
#define PRIMSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace primspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input / validation errors.
struct DimensionMismatch : Error { using Error::Error; };
struct NonStochastic : Error { using Error::Error; };
struct NonAbelian : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct DegenerateBranch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NotSelfSupporting : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };
struct NotKoopman : Error { using Error::Error; };
struct NotFixed : Error { using Error::Error; };
struct MultiGenerator : Error { using Error::Error; };
struct NoErgodicInside : Error { using Error::Error; };

// Numerical-breakdown errors. For valid stochastic input these indicate a
// tolerance misconfiguration or a bug, never a failure of the theory.
struct NumericError : Error { using Error::Error; };
struct NotConverged : NumericError { using NumericError::NumericError; };
struct SingularSolve : NumericError { using NumericError::NumericError; };
struct DecompositionFailure : NumericError { using NumericError::NumericError; };
struct NonUniqueOnMinimalClass : NumericError { using NumericError::NumericError; };
struct NotConstantOnSupport : NumericError { using NumericError::NumericError; };
struct ProjectionUnavailable : NumericError { using NumericError::NumericError; };
struct EquivalenceViolation : NumericError { using NumericError::NumericError; };

}  // namespace primspec

#endif  // PRIMSPEC_ERRORS_HPP
