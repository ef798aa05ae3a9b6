#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "equable/eisenstein.hpp"

namespace equable {

/**
 * Ordered vertex triple on the lattice. Degenerate (collinear, or even
 * coincident) triples are representable; the classification operations
 * reject them where it matters. Translation is not baked into the type:
 * operations that care subtract a vertex themselves.
 */
struct LatticeTriangle {
    Eisenstein A, B, C;

    friend constexpr bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;
};

/// A length n*sqrt(3) with n >= 1. Every side of an equable lattice triangle
/// has this form; see is_equable for why.
struct Sqrt3Length {
    int64_t n = 1;

    friend constexpr bool operator==(const Sqrt3Length&, const Sqrt3Length&) = default;
    friend constexpr auto operator<=>(const Sqrt3Length&, const Sqrt3Length&) = default;
};

/**
 * Sorted triple of squared side lengths. Euclidean motions (including
 * reflections) preserve exactly the multiset of side lengths, and SSS says
 * the multiset determines the triangle up to congruence, so this is a
 * complete, exact congruence invariant.
 */
struct CongruenceKey {
    std::array<int64_t, 3> norms{};  // ascending

    friend constexpr bool operator==(const CongruenceKey&, const CongruenceKey&) = default;
    friend constexpr auto operator<=>(const CongruenceKey&, const CongruenceKey&) = default;
};

/// Exact strict triangle inequality on squared lengths: sqrt(N1) + sqrt(N2) >
/// sqrt(N3) for every arrangement of the (unsorted) triple, all Ni >= 1.
bool strict_triangle_inequality_squared(std::array<int64_t, 3> norms);

/// Squared side lengths (|A-C|^2, |B-C|^2, |A-B|^2), exact integers.
std::array<int64_t, 3> side_norms(const LatticeTriangle& t);

/// The integer D with signed area = (sqrt(3)/4) * D: writing u = A-C and
/// v = B-C in omega-coordinates, D = u1*v2 - u2*v1. Translation-invariant by
/// construction; zero exactly for collinear vertices.
int64_t area_quanta(const LatticeTriangle& t);

/// The n >= 1 with N = 3*n^2, if it exists.
std::optional<int64_t> sqrt3_side_decomposition(int64_t N);

/// Exact equability test (perimeter equals area), integer arithmetic only.
bool is_equable(const LatticeTriangle& t);

/// Floating-point cross-check of is_equable: compares |perimeter - area|
/// against tol in cartesian coordinates. Independent of the exact route.
bool is_equable_float(const LatticeTriangle& t, double tol);

/// Whether sqrt(m_1) + ... + sqrt(m_k) is rational (all m_i >= 1). Such a
/// sum is rational iff every term is, i.e. iff every m_i is a perfect
/// square. An empty sum is 0 and counts as rational.
bool sum_sqrt_is_rational(std::span<const int64_t> m);

/// Congruence class of a non-degenerate triangle. Throws
/// std::invalid_argument when area_quanta(t) == 0.
CongruenceKey congruence_key(const LatticeTriangle& t);

/// Key of the congruence class with sides n_i*sqrt(3): sorted (3*n_i^2).
CongruenceKey congruence_key_of_sides(const std::array<Sqrt3Length, 3>& sides);

/// Heron's identity specialised to equable triangles with sides n_i*sqrt(3),
/// as one exact integer equation. True iff such a triangle is equable.
bool heron_equable_identity(const std::array<int64_t, 3>& n);

}  // namespace equable
