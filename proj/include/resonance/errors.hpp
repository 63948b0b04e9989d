#ifndef RESONANCE_ERRORS_HPP
#define RESONANCE_ERRORS_HPP

// Exception types used across the library.  Every recoverable failure mode has
// its own class so callers (and the CLI, which maps them onto machine-readable
// JSON error objects) can react to the *kind* of failure, not a message string.

#include <stdexcept>
#include <string>

namespace resonance {

// Bad argument values: empty sieve ranges, nonpositive limits, malformed
// grids, out-of-range parameters of any operation.
struct parameter_error : std::invalid_argument {
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Character index inconsistent with the unit-group structure of the modulus.
struct invalid_index_error : parameter_error {
    explicit invalid_index_error(const std::string& what) : parameter_error(what) {}
};

// A coefficient request for a form the library does not ship.
struct unsupported_form_error : parameter_error {
    explicit unsupported_form_error(const std::string& what) : parameter_error(what) {}
};

// Evaluation requested at a pole (zeta at s = 1 and relatives).
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Evaluation requested outside the documented (spec kind, s) domain.
struct unsupported_region_error : std::domain_error {
    explicit unsupported_region_error(const std::string& what) : std::domain_error(what) {}
};

// Logarithm branch tracking walked into (numerically onto) a zero.
struct zero_crossing_error : std::runtime_error {
    explicit zero_crossing_error(const std::string& what) : std::runtime_error(what) {}
};

// Argument-principle contour could not be completed: a zero sits on (or
// numerically on) the contour even after the permitted nudges.
struct contour_error : std::runtime_error {
    explicit contour_error(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient cache problems.
struct cache_not_found_error : std::runtime_error {
    explicit cache_not_found_error(const std::string& what) : std::runtime_error(what) {}
};
struct cache_integrity_error : std::runtime_error {
    explicit cache_integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// Off-line machinery used without (or outside) a zero-free certificate.
struct certificate_required_error : std::runtime_error {
    explicit certificate_required_error(const std::string& what) : std::runtime_error(what) {}
};

// Kronecker pipeline: a prime window came out empty.
struct degenerate_window_error : std::runtime_error {
    explicit degenerate_window_error(const std::string& what) : std::runtime_error(what) {}
};

// Alignment: rationally dependent frequencies (Lambda = 0), or an exact
// enumeration that would be too large and has no analytic fallback.
struct dependent_frequencies_error : std::runtime_error {
    explicit dependent_frequencies_error(const std::string& what) : std::runtime_error(what) {}
};
struct enumeration_too_large_error : std::runtime_error {
    explicit enumeration_too_large_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace resonance

#endif
