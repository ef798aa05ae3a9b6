#include "equable/search.hpp"

#include <stdexcept>

#include "equable/intmath.hpp"

namespace equable {

std::vector<Eisenstein> points_of_norm(int64_t N) {
    if (N < 1) throw std::domain_error("points_of_norm: N must be >= 1");
    // norm = ((a-b)^2 + a^2 + b^2) / 2 >= a^2 / 2, so |a| <= sqrt(2N); b too.
    const int64_t L = integer_sqrt(checked_mul(2, N));
    std::vector<Eisenstein> out;
    for (int64_t a = -L; a <= L; ++a)
        for (int64_t b = -L; b <= L; ++b)
            if (a * a - a * b + b * b == N) out.push_back({a, b});
    return out;  // loop order is already lexicographic
}

std::pair<Eisenstein, Eisenstein> canonical_pair(Eisenstein A, Eisenstein B) {
    std::pair<Eisenstein, Eisenstein> best{A, B};  // identity image, so never empty
    for (const Eisenstein& u : units()) {
        for (int use_conj = 0; use_conj < 2; ++use_conj) {
            const Eisenstein a = u * (use_conj ? conjugate(A) : A);
            const Eisenstein b = u * (use_conj ? conjugate(B) : B);
            if (std::pair{a, b} < best) best = {a, b};
            if (std::pair{b, a} < best) best = {b, a};
        }
    }
    return best;
}

std::vector<LatticeTriangle> realize_sides(const std::array<Sqrt3Length, 3>& sides) {
    std::array<int64_t, 3> norms;
    for (size_t i = 0; i < 3; ++i) {
        if (sides[i].n < 1)
            throw std::invalid_argument("realize_sides: side coefficients must be >= 1");
        norms[i] = 3 * checked_mul(sides[i].n, sides[i].n);
    }
    if (!strict_triangle_inequality_squared(norms))
        throw std::invalid_argument("realize_sides: sides violate the triangle inequality");
    const std::vector<Eisenstein> as = points_of_norm(norms[0]);
    const std::vector<Eisenstein> bs = points_of_norm(norms[1]);
    std::set<std::pair<Eisenstein, Eisenstein>> seen;
    std::vector<LatticeTriangle> out;
    for (const Eisenstein& A : as)
        for (const Eisenstein& B : bs) {
            if (norm(A - B) != norms[2]) continue;
            if (seen.insert(canonical_pair(A, B)).second)
                out.push_back({A, B, Eisenstein{0, 0}});
        }
    return out;
}

std::set<CongruenceKey> enumerate_equable_classes(SearchWindow w, SearchOptions opts) {
    std::vector<Eisenstein> pts;
    for (int64_t N = 1; N <= w.max_norm; ++N) {
        if (opts.filter_sqrt3_norms && !sqrt3_side_decomposition(N)) continue;
        const std::vector<Eisenstein> ring = points_of_norm(N);
        pts.insert(pts.end(), ring.begin(), ring.end());
    }
    std::set<CongruenceKey> keys;
    const Eisenstein origin{0, 0};
    for (const Eisenstein& A : pts)
        for (const Eisenstein& B : pts) {
            const LatticeTriangle t{A, B, origin};
            const int64_t D = area_quanta(t);
            const bool wanted = opts.orientation == Orientation::positive ? D > 0 : D < 0;
            if (!wanted) continue;
            if (is_equable(t)) keys.insert(congruence_key(t));
        }
    return keys;
}

}  // namespace equable
