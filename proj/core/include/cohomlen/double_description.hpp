#pragma once

#include <span>
#include <vector>

#include "cohomlen/rational.hpp"

namespace cohomlen {

/// Extreme rays of the pointed cone {y in R^dim : <row, y> >= 0 for every row}.
///
/// Rays come back as primitive integer vectors in a deterministic order.
/// Uses the double-description method with the combinatorial adjacency test,
/// so degenerate inputs need no perturbation. Throws DomainError when the
/// rows have rank below `dim` (the cone is not pointed).
std::vector<IntVector> extreme_rays(std::span<const IntVector> rows, std::size_t dim);

}  // namespace cohomlen
