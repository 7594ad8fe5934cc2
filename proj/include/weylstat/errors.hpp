#ifndef WEYLSTAT_ERRORS_HPP
#define WEYLSTAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylstat {

// Base class for every error this library raises on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A statistic was requested on a window outside its domain
// (e.g. adjacent descents on a window with negative letters).
struct not_applicable_error : error {
    using error::error;
};

// An element was required to lie in a group or sign class and does not.
struct membership_error : error {
    using error::error;
};

// Malformed one-line notation or malformed window contents.
struct parse_error : error {
    using error::error;
};

// A request exceeded a configured cap (enumeration size, degree, ...).
struct resource_limit_error : error {
    using error::error;
};

// An internal exact identity that must hold by construction failed.
// Raised instead of returning silently wrong data.
struct inconsistency_error : error {
    using error::error;
};

// A computation needed a positive variance and got zero.
struct degenerate_error : error {
    using error::error;
};

} // namespace weylstat

#endif
