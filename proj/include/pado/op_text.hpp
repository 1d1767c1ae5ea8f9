#pragma once

#include <string>

#include "pado/diff_op.hpp"

namespace pado {

/*
 * Text form of an operator, one term per coefficient monomial:
 *   operator := term ('+' term)*
 *   term     := rational '*' 'x^'k '*' 'Dx^'j      (y / Dy on the other chart)
 * Rationals are printed 'a/b' with an explicit denominator; whitespace is
 * insignificant on input. Terms are emitted sorted by (order, degree).
 */
std::string op_to_text(const DiffOp& a);

/* Inverse of op_to_text; chart inferred from the variable letters. */
DiffOp op_from_text(const std::string& text);

}  // namespace pado
