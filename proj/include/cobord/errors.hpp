#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

// A computation needed a monomial of degree at or below the first generator
// that is not configured (v_{k+1}); results would be silently truncated.
class CapacityError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A coefficient that must lie in Z_(2) has an even denominator.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A Steenrod computation would leave the degree range the algebra was built for.
class DegreeBoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Degree queried outside the window a degreewise object was computed on.
class WindowError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cobord
