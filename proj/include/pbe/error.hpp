#pragma once

#include <stdexcept>
#include <string>

namespace pbe {

// Malformed input: bad edges, bad files, illegal script entries, violated preconditions.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exhaustive computation was requested on a graph larger than the configured cap.
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent routes disagreed, or a proved structural property failed.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pbe
