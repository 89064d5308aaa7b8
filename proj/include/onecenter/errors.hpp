#ifndef ONECENTER_ERRORS_HPP
#define ONECENTER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace onecenter {

// Invalid instance input (duplicate points, vanishing denominator, bad config).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Circumcenter requested for an affinely dependent point set.
struct DegenerateSimplex : std::runtime_error {
    explicit DegenerateSimplex(const std::string& msg) : std::runtime_error(msg) {}
};

// Bisector of two identical points.
struct IdenticalPoints : std::runtime_error {
    explicit IdenticalPoints(const std::string& msg) : std::runtime_error(msg) {}
};

// Rational-function evaluation where the denominator vanishes.
struct PoleAtSample : std::runtime_error {
    explicit PoleAtSample(const std::string& msg) : std::runtime_error(msg) {}
};

// Symbolic Gram determinant vanishes identically; caller must reduce the set.
struct IdenticallyDegenerate : std::runtime_error {
    explicit IdenticallyDegenerate(const std::string& msg) : std::runtime_error(msg) {}
};

// Candidate-subset count exceeds the configured cap (multi-mobile tracing).
struct ComplexityGuard : std::runtime_error {
    explicit ComplexityGuard(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace onecenter

#endif
