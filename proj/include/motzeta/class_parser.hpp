#pragma once

#include "motzeta/laurent.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motzeta {

// Syntax or semantic error in the class-expression grammar, with the
// 0-based offset into the input where it was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Grammar: integer coefficients, symbols u and L (L expands to u^2),
// operators + - * ^ and parentheses. Exponents are integers; a negative
// exponent is only admitted on an invertible base (a signed monomial).
MotClass parse_class(const std::string& text);

} // namespace motzeta
