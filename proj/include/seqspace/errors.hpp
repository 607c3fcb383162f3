#pragma once

#include <stdexcept>
#include <string>

namespace seqspace {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Support metadata is `unknown` and no scan bound was supplied, so the
/// zerofree version cannot be formed.
struct UndecidableSupportError : Error {
    using Error::Error;
};

/// An index computation left the range of the 64-bit index type.
struct OverflowError : Error {
    using Error::Error;
};

/// A coordinate norm evaluated to NaN or infinity.
struct NonFiniteError : Error {
    using Error::Error;
};

/// The tail sum of the supplied envelope is infinite at the requested
/// exponent, so no membership certificate exists at this depth.
struct EnvelopeDivergesError : Error {
    using Error::Error;
};

/// The Luxemburg gauge bisection could not bracket the unit level set.
struct NoBracketError : Error {
    using Error::Error;
};

/// A structural independence check needs a deeper truncation.
struct DepthTooShallowError : Error {
    using Error::Error;
};

/// The witness carries no certified upper norm for its home space.
struct MissingMembershipCertificateError : Error {
    using Error::Error;
};

/// A norming functional was requested for the zero vector.
struct DegenerateDirectionError : Error {
    using Error::Error;
};

} // namespace seqspace
