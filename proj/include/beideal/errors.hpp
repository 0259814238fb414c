#pragma once

#include <stdexcept>

namespace bei {

/// A configured resource limit (variable count, sweep size, budget) was hit.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bei
