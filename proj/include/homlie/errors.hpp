#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlie {

/// Malformed input: dimension mismatches, bad permutations, parity-law violations,
/// unparsable rationals. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold. Carries the basis
/// tuple that exhibits the failure when one exists.
class PreconditionError : public std::logic_error {
public:
	PreconditionError(const std::string &what, std::vector<std::size_t> witness = {})
	    : std::logic_error(what), witness_(std::move(witness))
	{
	}

	const std::vector<std::size_t> &witness() const noexcept { return witness_; }

private:
	std::vector<std::size_t> witness_;
};

} // namespace homlie
