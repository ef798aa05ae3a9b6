#include "equable/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

#include "equable/eisenstein.hpp"

namespace equable {

std::vector<XyzSolution> enumerate_xyz() {
    // Bounds: z is pinned by z*(3xy - 4) = 4*(x+y), and feeding z >= y back
    // in gives 3xy^2 - 8y - 4x <= 0. With y = x this reads 3x^3 <= 12x, so
    // x <= 2; for x = 1 the quadratic allows y <= (8+sqrt(112))/6 = 3.09..,
    // for x = 2 only y <= 2. Hence the fixed ranges below are exhaustive.
    std::vector<XyzSolution> out;
    for (int64_t x = 1; x <= 2; ++x) {
        for (int64_t y = x; y <= 3; ++y) {
            const int64_t denom = 3 * x * y - 4;
            if (denom <= 0) continue;
            const int64_t num = 4 * (x + y);
            if (num % denom != 0) continue;
            const int64_t z = num / denom;
            if (z < y) continue;
            out.push_back({x, y, z});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<UvwSolution> enumerate_uvw_bruteforce(int64_t bound) {
    if (bound < 1)
        throw std::domain_error("enumerate_uvw_bruteforce: bound must be >= 1");
    // u, v, w stand for (-n1+n2+n3), (n1-n2+n3), (n1+n2-n3) with integer n_i,
    // so any two of them sum to an even number: all three share a parity.
    // Mixed-parity triples can satisfy the bare equation (1, 6, 56 does) but
    // encode no integer side data, hence the step-2 walk. All-odd triples
    // make the left side odd and the right side even, so the solutions that
    // survive are the all-even ones; the tests check that rather than assume
    // it here.
    std::vector<UvwSolution> out;
    for (int64_t u = 1; u <= bound; ++u) {
        for (int64_t v = u; v <= bound; v += 2) {
            for (int64_t w = v; w <= bound; w += 2) {
                const int64_t lhs = checked_mul(checked_mul(3, u), checked_mul(v, w));
                const int64_t rhs = checked_mul(16, checked_add(checked_add(u, v), w));
                if (lhs == rhs) out.push_back({u, v, w});
                // Once 3uv > 16 the left side outgrows the right in w, so
                // past the first excess no larger w can close the gap.
                if (3 * u * v > 16 && lhs > rhs) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<Sqrt3Length, 3> xyz_to_sides(const XyzSolution& s) {
    return {Sqrt3Length{s.y + s.z}, Sqrt3Length{s.x + s.z}, Sqrt3Length{s.x + s.y}};
}

}  // namespace equable
