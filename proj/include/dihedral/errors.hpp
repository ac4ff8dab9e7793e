#pragma once

#include <stdexcept>

namespace dihedral {

// Raised when a request exceeds a configured search cap. Callers that sweep
// many instances catch it and record the instance as skipped.
struct search_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dihedral
