// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace iqc {

// An operation would exceed a configured resource ceiling (e.g. qubit cap).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A statevector failed a runtime integrity check (e.g. norm drift).
class state_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; remembers the 1-based line the problem was found on.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace iqc
