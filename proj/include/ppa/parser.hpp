#pragma once
#include <stdexcept>
#include <string>

#include "ppa/algebra.hpp"

namespace ppa {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Grammar: sums of juxtaposed factors with ^ powers and parentheses.
// Atoms: e<v> (idempotent), a<k> / a<k>* (arrows), x<k> (short for a<k>* a<k>),
// w<v> (trace-normalized top element at v), rational literals p or p/q.
// Juxtaposing two monomials whose endpoints do not meet is an error.
Elem parse_element(const Algebra& A, const std::string& text);

} // namespace ppa
