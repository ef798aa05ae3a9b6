#include "equable/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "equable/intmath.hpp"

namespace equable {

bool strict_triangle_inequality_squared(std::array<int64_t, 3> norms) {
    std::sort(norms.begin(), norms.end());
    const auto [n1, n2, n3] = norms;
    if (n1 < 1) return false;
    // sqrt(N1) + sqrt(N2) > sqrt(N3)  <=>  2*sqrt(N1*N2) > N3 - N1 - N2.
    // Automatic when the right side is <= 0; otherwise square both sides.
    if (n3 <= n1 + n2) return true;
    const int64_t gap = n3 - n1 - n2;
    return checked_mul(gap, gap) < checked_mul(4, checked_mul(n1, n2));
}

std::array<int64_t, 3> side_norms(const LatticeTriangle& t) {
    return {norm(t.A - t.C), norm(t.B - t.C), norm(t.A - t.B)};
}

int64_t area_quanta(const LatticeTriangle& t) {
    const Eisenstein u = t.A - t.C;
    const Eisenstein v = t.B - t.C;
    return checked_sub(checked_mul(u.a, v.b), checked_mul(u.b, v.a));
}

std::optional<int64_t> sqrt3_side_decomposition(int64_t N) {
    if (N < 1) return std::nullopt;
    if (N % 3 != 0) return std::nullopt;
    const int64_t k = N / 3;
    const int64_t n = integer_sqrt(k);
    if (n * n != k) return std::nullopt;
    return n;
}

bool is_equable(const LatticeTriangle& t) {
    // With sides n_i*sqrt(3) the perimeter is sqrt(3)*(n1+n2+n3) and the
    // area is (sqrt(3)/4)*|D|, so equability is the integer identity
    //   4*(n1 + n2 + n3) = |D|.
    //
    // Requiring every side norm to decompose as 3n^2 loses nothing: if the
    // triangle is equable then sqrt(3*Na) + sqrt(3*Nb) + sqrt(3*Nc) equals
    // (3/4)*|D|, which is rational, and a rational sum of square roots of
    // integers has every term rational; sqrt(3*N) being a (rational, hence
    // integer) number forces N = 3n^2.
    const int64_t D = area_quanta(t);
    if (D == 0) return false;  // degenerate: area 0, never equable
    int64_t n_sum = 0;
    for (const int64_t N : side_norms(t)) {
        const auto n = sqrt3_side_decomposition(N);
        if (!n) return false;
        n_sum = checked_add(n_sum, *n);
    }
    return checked_mul(4, n_sum) == std::abs(D);
}

bool is_equable_float(const LatticeTriangle& t, double tol) {
    if (!(tol > 0)) throw std::domain_error("is_equable_float: tol must be positive");
    // All vertices coincident gives perimeter = area = 0; degenerate, not
    // equable, and the |p - a| comparison alone would pass it.
    if (t.A == t.B && t.B == t.C) return false;
    const std::complex<double> pa = to_cartesian(t.A);
    const std::complex<double> pb = to_cartesian(t.B);
    const std::complex<double> pc = to_cartesian(t.C);
    const double perimeter = std::abs(pa - pc) + std::abs(pb - pc) + std::abs(pa - pb);
    const std::complex<double> u = pa - pc;
    const std::complex<double> v = pb - pc;
    const double area = 0.5 * std::abs(u.real() * v.imag() - u.imag() * v.real());
    return std::abs(perimeter - area) < tol;
}

bool sum_sqrt_is_rational(std::span<const int64_t> m) {
    for (const int64_t mi : m) {
        if (mi < 1) throw std::domain_error("sum_sqrt_is_rational: entries must be >= 1");
        if (!is_perfect_square(mi)) return false;
    }
    return true;
}

CongruenceKey congruence_key(const LatticeTriangle& t) {
    if (area_quanta(t) == 0)
        throw std::invalid_argument("congruence_key: degenerate triangle");
    std::array<int64_t, 3> norms = side_norms(t);
    std::sort(norms.begin(), norms.end());
    return {norms};
}

CongruenceKey congruence_key_of_sides(const std::array<Sqrt3Length, 3>& sides) {
    std::array<int64_t, 3> norms;
    for (size_t i = 0; i < 3; ++i)
        norms[i] = 3 * checked_mul(sides[i].n, sides[i].n);
    std::sort(norms.begin(), norms.end());
    return {norms};
}

bool heron_equable_identity(const std::array<int64_t, 3>& n) {
    // Heron for sides a, b, c and an equable triangle (16*Area^2 on the
    // left, 16*perimeter^2 on the right):
    //   (a+b+c)(-a+b+c)(a-b+c)(a+b-c) = 16*(a+b+c)^2.
    // With a = n1*sqrt(3) etc. each factor carries one sqrt(3), the left
    // side picks up (sqrt 3)^4 = 9 and the right 16*3, leaving the integer
    // identity  9*S*(-n1+n2+n3)(n1-n2+n3)(n1+n2-n3) = 48*S^2,  S = n1+n2+n3.
    const auto [n1, n2, n3] = n;
    const int64_t s = checked_add(checked_add(n1, n2), n3);
    const int64_t p1 = checked_add(checked_sub(n2, n1), n3);
    const int64_t p2 = checked_add(checked_sub(n1, n2), n3);
    const int64_t p3 = checked_sub(checked_add(n1, n2), n3);
    const int64_t lhs = checked_mul(checked_mul(checked_mul(9, s), checked_mul(p1, p2)), p3);
    const int64_t rhs = checked_mul(48, checked_mul(s, s));
    return lhs == rhs;
}

}  // namespace equable
