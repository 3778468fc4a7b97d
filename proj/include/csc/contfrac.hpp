#pragma once

#include "csc/rat.hpp"

#include <vector>

namespace csc {

/// Negative continued fraction expansion of r <= -1:
///   r = a0 - 1/(a1 - 1/( ... - 1/am))
/// with every ai <= -2. The expansion is unique; an integer r <= -2 gives
/// the singleton [r]. Throws DomainError for r > -1 and for r == -1 (whose
/// only candidate expansion [-1] violates the ai <= -2 normal form).
std::vector<Int> negative_cf_expand(const Rat& r);

/// Evaluates the nested fraction a0 - 1/(a1 - ...). Inverse of
/// negative_cf_expand on its image. Throws DomainError on an empty list or
/// an intermediate division by zero.
Rat cf_evaluate(const std::vector<Int>& coeffs);

} // namespace csc
