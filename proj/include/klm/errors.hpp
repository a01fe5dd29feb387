#pragma once

#include <stdexcept>
#include <string>

namespace klm {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: malformed JSON, a set system violating the flat axioms,
// out-of-range family parameters, invalid element ids.
struct ValidationError : Error {
    using Error::Error;
};

// Ground set larger than the configured cap (lattices are enumerated
// explicitly, so the cap is a hard resource boundary).
struct SizeCapError : Error {
    using Error::Error;
};

// An exact division failed.  This never indicates bad input; it means an
// arithmetic identity the code relies on does not hold, i.e. a bug.
struct ExactnessError : Error {
    using Error::Error;
};

} // namespace klm
