#pragma once

#include "sshl/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace sshl {

using Matrix = std::vector<std::vector<Q>>;

struct dimension_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Row denominators are cleared, then fraction-free elimination runs on integers.
Q det_exact(const Matrix& a);
// First-row expansion; requires an antisymmetric matrix of even order.
Q pfaffian_exact(const Matrix& a);

} // namespace sshl
