#ifndef ZONODT_ERRORS_HPP
#define ZONODT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zonodt {

// Bad input: malformed JSON, violated structural invariants, wrong sizes.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or group-order cap was exceeded. CLI exit code 3.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zonodt

#endif
