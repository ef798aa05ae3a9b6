#pragma once

#include <cstdint>

namespace equable {

/// floor(sqrt(n)) for n >= 0, exact for the full int64 range. Newton
/// iteration on integers; a double estimate only seeds the iteration and is
/// always corrected. Throws std::domain_error for n < 0.
int64_t integer_sqrt(int64_t n);

/// True iff n = k^2 for some integer k >= 0. Throws for n < 0.
bool is_perfect_square(int64_t n);

/// The unique squarefree d with n = d*k^2, for n >= 1. Trial division up to
/// sqrt(n); the magnitudes in scope are tiny. Note sqrt(n) is rational iff
/// squarefree_part(n) == 1.
int64_t squarefree_part(int64_t n);

}  // namespace equable
