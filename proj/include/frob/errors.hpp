#pragma once

#include <stdexcept>

namespace frob {

// Bad input values: a violated precondition the caller is responsible for.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Work, memory, or integer range exceeds the configured limits.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A condition the theory rules out was reached. Never user error; either a
// bug on our side or a genuine gap in the closed-form machinery, and it must
// surface rather than be silently resolved.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace frob
