#pragma once

#include "sqk/bigint.hpp"

#include <vector>

namespace sqk {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Invariant factors d_1 | d_2 | ... of an r x c integer matrix, padded with
// zeros to length c. The cokernel of the row space is ⊕ Z/d_i, so a zero
// factor is a free Z summand and a factor 1 is trivial.
std::vector<BigInt> smith_invariant_factors(IntMatrix m, std::size_t columns);

// Exact determinant (fraction-free Bareiss elimination). Empty matrix → 1.
BigInt determinant(const IntMatrix& m);

}  // namespace sqk
