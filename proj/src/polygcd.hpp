#pragma once

// Integer polynomial gcd and exact division over Z[q, rho] (non-negative exponents).

#include "qwb/laurent.hpp"

namespace qwb::detail {

/// Primitive gcd of a and b with positive leading coefficient. Both inputs
/// must have non-negative exponents; the result ignores integer content.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// a / b assuming b divides a with an integer-coefficient quotient.
/// Throws std::logic_error when the division is not exact.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qwb::detail
