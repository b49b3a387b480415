#pragma once

#include <stdexcept>
#include <string>

namespace bsymbol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parameter / construction errors
struct NonPrimeError : Error { using Error::Error; };
struct NonPrimitivePolynomialError : Error { using Error::Error; };
struct DegreeMismatchError : Error { using Error::Error; };
struct ZeroElementError : Error { using Error::Error; };
struct NonDivisorError : Error { using Error::Error; };
struct NotCoprimeError : Error { using Error::Error; };
struct OrderMismatchError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct BOutOfRangeError : Error { using Error::Error; };

// theory errors
struct NotSemiprimitiveError : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };
struct CardinalityError : Error { using Error::Error; };
struct NonIntegralWeightError : Error { using Error::Error; };
struct UNotOneError : Error { using Error::Error; };

// resource errors
struct BudgetExceededError : Error { using Error::Error; };

}  // namespace bsymbol
