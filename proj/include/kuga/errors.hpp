#pragma once

#include <stdexcept>
#include <string>

namespace kuga {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// cyclo
struct NotARootOfUnity : Error {
    using Error::Error;
};
struct ExponentOutOfRange : Error {
    using Error::Error;
};

// symplectic
struct NotSymplectic : Error {
    using Error::Error;
};
struct OrderExceedsCap : Error {
    using Error::Error;
};
struct ClosureExceedsCap : Error {
    using Error::Error;
};
struct NumericalBreakdown : Error {
    using Error::Error;
};
struct DoesNotFixPoint : Error {
    using Error::Error;
};

// rst
struct NotFiniteOrder : Error {
    using Error::Error;
};
struct SnapFailure : Error {
    using Error::Error;
};
struct WrongLocus : Error {
    using Error::Error;
};

// io
struct ParseError : Error {
    using Error::Error;
};

} // namespace kuga
