#pragma once
#include <stdexcept>
#include <string>

namespace polymom {

// Base for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: schema violations, dimension mismatches, unmet preconditions,
// missing or insufficient data. CLI maps this to exit code 2.
struct validation_error : error {
    using error::error;
};

// Geometric or algebraic degeneracy discovered mid-computation: zero-volume
// simplices, parallel diagonals, ambiguous kernels, poles, coincident nodes.
// CLI maps this to exit code 3.
struct degeneracy_error : error {
    using error::error;
};

// Embedded or external data file failed its checksum or structural
// validation. CLI maps this to exit code 3.
struct data_integrity_error : error {
    using error::error;
};

} // namespace polymom
