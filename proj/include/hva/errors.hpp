#pragma once

#include <stdexcept>
#include <string>

namespace hva
{

/// Bad user-supplied argument (size mismatch, out-of-range parameter, ...).
struct InputError : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard resource cap (e.g. dense work above the site limit).
struct ResourceError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : std::logic_error
{
	using std::logic_error::logic_error;
};

} // namespace hva
