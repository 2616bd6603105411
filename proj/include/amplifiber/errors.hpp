#pragma once

#include <stdexcept>
#include <string>

namespace amplifiber {

// Bad input: dimensions out of range, malformed index sets, nodes that are
// not strictly increasing, matrices that fail a required positivity
// certificate.  The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation hit a non-generic configuration: a vanishing determinant
// where a nonzero one is required, a direction lying on a cone wall, a rank
// drop in Y.  The CLI maps this to exit code 3.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A broken internal invariant; always a bug.  The CLI maps this to exit
// code 4.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace amplifiber
