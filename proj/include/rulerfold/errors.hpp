#pragma once

#include <stdexcept>
#include <string>

namespace rulerfold {

/// Malformed text: rational literals, JSON documents, sign strings.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The instance is too large for the requested exhaustive method, or a
/// configured node cap was reached before the search could finish.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace rulerfold
