#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "daha/algebra.hpp"

namespace daha {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

// Expression grammar, normalized in `alg`:
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ['*'] factor }          (whitespace also multiplies)
//   factor := atom [ '^' integer ]
//   atom   := integer ['/' integer] | 'i' | 'r2' | 't' | 'u' | 'v'
//           | x1 y1 c1 e1 s1 t1 xi1 eta1 tau1 beta1 nu1
//           | '(' i ',' j ')' | '~(' i ',' j ')' | '[' i ',' j ']'
//           | '~[' i ',' j ']' | '~[' i ']' | '(' expr ')'
// Products are taken in the literal left-to-right order. c's and e's that
// the algebra lacks are taken from the outer factor of a tensor product.
Element parse(const Algebra& alg, const std::string& text);

// Scalar expression in i, r2, t, u, v and rationals.
Scalar parse_scalar(const std::string& text);

}  // namespace daha
