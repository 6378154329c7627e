#pragma once

#include <stdexcept>

namespace lehmer {

/// A violated internal invariant (a bug, not bad input). The CLI maps it to exit code 2.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace lehmer
