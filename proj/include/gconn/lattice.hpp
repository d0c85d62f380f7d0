#pragma once

#include "gconn/rational.hpp"

#include <vector>

namespace gconn {

using IntMatrix = std::vector<std::vector<Integer>>;

// Basis of {x in Z^n : A x = 0} as a saturated lattice (unimodular column
// reduction, so the basis generates the full integer kernel).
IntMatrix integer_kernel(const IntMatrix& a, size_t ncols);

// gcd of a list; 0 for an empty or all-zero list.
Integer integer_gcd(const std::vector<Integer>& v);

} // namespace gconn
