#pragma once
#include <stdexcept>

namespace subcode {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration or iteration limit was hit. Callers decide whether to raise
// the cap or switch to a cheaper construction.
struct CapExceeded : Error {
    using Error::Error;
};

// Malformed text input (group files, certificates, dumps, LP files).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace subcode
