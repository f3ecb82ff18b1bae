#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cross {

// Enumeration or mesh generation would exceed the configured resource caps.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested operation has no closed form / supported path for this family.
class unsupported_error : public std::invalid_argument {
public:
    explicit unsupported_error(const std::string& what) : std::invalid_argument(what) {}
};

// An eigensolve or root-find failed to converge or produced non-finite values.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Metric-spec text that does not parse; carries the offending position.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t position, const std::string& reason)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + reason),
          position_(position), reason_(reason) {}
    std::size_t position() const { return position_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

} // namespace cross
