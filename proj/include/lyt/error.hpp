#pragma once

#include <stdexcept>
#include <string>

namespace lyt
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad shapes, out-of-range indices, unparsable files.
class InputError : public Error
{
public:
    using Error::Error;
};

/// A broken internal invariant. Never expected on valid input.
class InternalError : public Error
{
public:
    using Error::Error;
};

} // namespace lyt
