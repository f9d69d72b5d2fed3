#pragma once

#include <stdexcept>
#include <string>

namespace affuse {

// Rejected external input: bad config values, malformed dataset files,
// out-of-range labels. CLI maps this family to its config/usage exit code
// when raised during argument/config handling.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Shape disagreement between operands; the message names both shapes.
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Broken API contract, i.e. a programming error on the caller's side
// (backward on a non-scalar loss, optimizer step without gradients).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace affuse
