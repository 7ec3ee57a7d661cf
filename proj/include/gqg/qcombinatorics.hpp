#pragma once

#include <optional>

#include "gqg/cyclotomic.hpp"

namespace gqg {

/// (m)_x = 1 + x + ... + x^(m-1); (0)_x = 0.
CycScalar q_number(unsigned m, const CycScalar& x);

/// (m)_x! = (1)_x (2)_x ... (m)_x; (0)_x! = 1.
CycScalar q_factorial(unsigned m, const CycScalar& x);

/// Gaussian binomial (m choose k)_x by the two-sided Pascal recursion,
/// so it is defined even when q-factorials vanish.
CycScalar q_binomial(unsigned m, unsigned k, const CycScalar& x);

/// Smallest r >= 2 with (r)_x! = 0, or 0 if none exists. In characteristic
/// zero this is the multiplicative order of x when x is a root of unity
/// different from 1, and 0 otherwise. Throws on x = 0.
unsigned char_order(const CycScalar& x);

/// Exact solve of base^t = value over t in Z. Roots of unity are checked over
/// one period; otherwise the field norm pins |t| (and its sign) whenever the
/// norm of base is not 1, leaving only norm-one units of infinite order to a
/// bounded search of radius search_cap. Throws on base = 0 or value = 0.
std::optional<long> power_index(const CycScalar& base, const CycScalar& value,
                                long search_cap = 256);

} // namespace gqg
