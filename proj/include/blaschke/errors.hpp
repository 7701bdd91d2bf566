#pragma once

#include <stdexcept>
#include <string>

namespace blaschke {

// Error classes thrown across the library. Messages start with the
// operation that failed, e.g. "preimages: polish did not converge".
struct PoleHit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RootFindFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotExpanding : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalBreakdown : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundaryBlowup : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ClassMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace blaschke
