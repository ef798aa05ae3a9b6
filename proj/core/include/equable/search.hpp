#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "equable/eisenstein.hpp"
#include "equable/triangle.hpp"

namespace equable {

/// Verification region for the exhaustive scan: bound on norm(A-C) and
/// norm(B-C) once C is translated to the origin. The scan certifies the
/// classification only within its window.
struct SearchWindow {
    int64_t max_norm = 300;
};

enum class Orientation {
    positive,  // keep pairs with area quanta D > 0
    negative,  // keep pairs with D < 0 (reflection-symmetric, for cross-checks)
};

struct SearchOptions {
    Orientation orientation = Orientation::positive;
    // A norm that is not of the form 3n^2 cannot be the squared side of an
    // equable triangle (see is_equable), so such points can be skipped before
    // pairing. Pure performance lever; results are identical either way.
    bool filter_sqrt3_norms = true;
};

/// All z with norm(z) = N, in lexicographic (a, b) order.
/// Throws std::domain_error for N < 1.
std::vector<Eisenstein> points_of_norm(int64_t N);

/// Lexicographically least image of the ordered pair (A, B) under the 12
/// origin-fixing lattice symmetries (six units, optionally composed with
/// conjugation) applied to both components, allowing an A<->B swap. Two
/// pairs share a canonical image iff an origin-fixing motion maps one
/// triangle (A, B, 0) onto the other with 0 staying put. Full congruence
/// also allows moving which vertex sits at 0; compare congruence_key for
/// that.
std::pair<Eisenstein, Eisenstein> canonical_pair(Eisenstein A, Eisenstein B);

/// All triangles (A, B, 0) with norm(A) = 3*n_a^2, norm(B) = 3*n_b^2,
/// norm(A-B) = 3*n_c^2, deduplicated up to the 12-element point group with
/// swap; one deterministic representative per class (the first candidate in
/// scan order). Empty result means the side triple has no lattice
/// realization in this normalization. Throws std::invalid_argument unless
/// the sides satisfy the strict triangle inequality.
std::vector<LatticeTriangle> realize_sides(const std::array<Sqrt3Length, 3>& sides);

/// Exhaustive classification within the window: scans every pair (A, B)
/// with 1 <= norm <= max_norm and fixed orientation (C pinned at 0 —
/// translations, rotations and reflections are all Euclidean motions), and
/// collects the congruence keys of the equable triangles found.
std::set<CongruenceKey> enumerate_equable_classes(SearchWindow w, SearchOptions opts = {});

}  // namespace equable
