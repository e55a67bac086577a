#pragma once

#include "qortho/poly.hpp"

#include <stdexcept>
#include <string>

namespace qortho {

/// Error raised by the expression parser.
class parse_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical text form of a scalar in the CLI grammar (integers, q, v,
/// + - * / ^, parentheses). Values with only even v-exponents are printed
/// in q; anything else in v. The printer is deterministic: equal scalars
/// always render to the same string.
std::string render_scalar(const Scalar& s);
/// Canonical text form of a polynomial (grammar above plus x and s), terms
/// in descending x- then s-degree.
std::string render_poly(const Poly& p);
std::string render_poly_latex(const Poly& p);

/// Parses the scalar grammar; q is read as v^2. Throws parse_error.
Scalar parse_scalar(const std::string& text);
/// Parses the polynomial grammar (scalars plus x, s). Division by non-scalar
/// subexpressions and negative powers of non-scalars are rejected.
Poly parse_poly(const std::string& text);

}  // namespace qortho
