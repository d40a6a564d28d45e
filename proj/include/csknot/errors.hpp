#ifndef CSKNOT_ERRORS_HPP
#define CSKNOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csknot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error { using Error::Error; };
struct KOutOfRangeError : Error { using Error::Error; };
struct DependentRowsError : Error { using Error::Error; };
struct NonMonicDivisorError : Error { using Error::Error; };
struct NotPrimeError : Error { using Error::Error; };
struct NotSquarefreeError : Error { using Error::Error; };
struct NonUnitConstantTermError : Error { using Error::Error; };
struct NonMonicError : Error { using Error::Error; };
struct DegreeTooSmallError : Error { using Error::Error; };
struct ZeroConstantTermError : Error { using Error::Error; };
struct UnknownFamilyError : Error { using Error::Error; };
struct OrderMismatchError : Error { using Error::Error; };
struct AllZeroGeneratorsError : Error { using Error::Error; };
struct NotAFactorError : Error { using Error::Error; };
struct HypothesesNotMetError : Error { using Error::Error; };
struct CharpolyMismatchError : Error { using Error::Error; };
struct NotCsPolynomialError : Error { using Error::Error; };
struct NonInvertibleMatrixError : Error { using Error::Error; };
struct BoundTooLargeError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };

} // namespace csknot

#endif
