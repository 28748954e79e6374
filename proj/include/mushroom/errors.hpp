#ifndef MUSHROOM_ERRORS_HPP
#define MUSHROOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mushroom {

// Malformed container (wrong magic, wrong structure).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid container whose payload length disagrees with its header.
struct LengthError : std::runtime_error {
    explicit LengthError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite value where a finite one is required.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mushroom

#endif
