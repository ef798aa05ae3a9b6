#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "equable/triangle.hpp"

namespace equable {

/// Positive solution of 3uvw = 16(u+v+w) with u <= v <= w. For solutions
/// arising from triangle sides, u, v, w share one parity and are in fact all
/// even; the enumerators verify rather than assume the evenness.
struct UvwSolution {
    int64_t u = 0, v = 0, w = 0;

    friend constexpr bool operator==(const UvwSolution&, const UvwSolution&) = default;
    friend constexpr auto operator<=>(const UvwSolution&, const UvwSolution&) = default;
};

/// Positive solution of the reduced equation 3xyz = 4(x+y+z), x <= y <= z
/// (obtained from UvwSolution by halving).
struct XyzSolution {
    int64_t x = 0, y = 0, z = 0;

    friend constexpr bool operator==(const XyzSolution&, const XyzSolution&) = default;
    friend constexpr auto operator<=>(const XyzSolution&, const XyzSolution&) = default;
};

/// All positive solutions of 3xyz = 4(x+y+z) with x <= y <= z, via the exact
/// bound derivation (x <= 2, y <= 3, z determined). Ascending order.
std::vector<XyzSolution> enumerate_xyz();

/// Independent oracle: scans 3uvw = 16(u+v+w) directly over u <= v <= w <=
/// bound, sharing nothing with enumerate_xyz's bound derivation. Ascending
/// order. Throws std::domain_error for bound < 1.
std::vector<UvwSolution> enumerate_uvw_bruteforce(int64_t bound);

/// Side lengths of the equable triangle encoded by a solution:
/// (n_a, n_b, n_c) = (y+z, x+z, x+y), each a coefficient of sqrt(3).
std::array<Sqrt3Length, 3> xyz_to_sides(const XyzSolution& s);

}  // namespace equable
