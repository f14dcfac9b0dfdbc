#pragma once

#include <stdexcept>
#include <string>

namespace hec {

// Raised when compiled-in data, a data file, or an internal exactness check
// is inconsistent (non-integral invariant dimension, bad cache header, ...).
// The CLI maps this to exit code 2; plain usage errors use the standard
// std::invalid_argument / std::domain_error and map to exit code 1.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hec
