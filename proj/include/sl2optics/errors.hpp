#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl2optics {

/// Thrown when a computed matrix has drifted outside its numerical
/// validity envelope (unit determinant, metric preservation) and the
/// result can no longer be trusted.
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Chain mini-language rejection. Carries the 1-based character
/// position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace sl2optics
