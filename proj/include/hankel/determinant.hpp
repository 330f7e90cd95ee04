#pragma once

#include <vector>

#include "hankel/polynomial.hpp"

namespace hankel {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Cofactor expansion along the first row.
Polynomial determinant(const PolyMatrix& m);

}  // namespace hankel
