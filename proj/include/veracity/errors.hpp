#pragma once

#include <stdexcept>
#include <string>

namespace veracity {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible tensor/layer shapes.
struct DimensionError : Error {
    using Error::Error;
};

// Invalid argument outside of shape problems (empty input, bad range, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// Malformed input file; message carries file/line context.
struct ParseError : Error {
    using Error::Error;
};

// Corpus-level data problems (duplicate ids, impossible split, ...).
struct DataError : Error {
    using Error::Error;
};

// Operation called in the wrong order (backward without forward, ...).
struct StateError : Error {
    using Error::Error;
};

// Non-finite values where finite ones are required (diverged training, ...).
struct NumericError : Error {
    using Error::Error;
};

}  // namespace veracity
