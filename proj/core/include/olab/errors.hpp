#pragma once

#include <stdexcept>
#include <string>

namespace olab {

// Base classes AND the CLI exit-code contract: UsageError -> 2,
// DataError -> 3, NumericError -> 4.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rule disagrees with a schema on a fixed position.
struct MembershipError : DataError {
    MembershipError(int index, const std::string& what) : DataError(what), violating_index(index) {}
    int violating_index;
};

struct DegenerateVariance : NumericError {
    using NumericError::NumericError;
};

struct InsufficientData : NumericError {
    using NumericError::NumericError;
};

struct NonConvergence : NumericError {
    using NumericError::NumericError;
};

struct DomainError : NumericError {
    using NumericError::NumericError;
};

}  // namespace olab
