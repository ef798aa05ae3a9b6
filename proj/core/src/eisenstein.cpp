#include "equable/eisenstein.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace equable {

int64_t checked_add(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("checked_add: 64-bit overflow");
    return r;
}

int64_t checked_sub(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("checked_sub: 64-bit overflow");
    return r;
}

int64_t checked_mul(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("checked_mul: 64-bit overflow");
    return r;
}

int64_t checked_neg(int64_t x) {
    return checked_sub(0, x);
}

Eisenstein operator+(Eisenstein z, Eisenstein w) {
    return {checked_add(z.a, w.a), checked_add(z.b, w.b)};
}

Eisenstein operator-(Eisenstein z, Eisenstein w) {
    return {checked_sub(z.a, w.a), checked_sub(z.b, w.b)};
}

Eisenstein operator-(Eisenstein z) {
    return {checked_neg(z.a), checked_neg(z.b)};
}

Eisenstein operator*(Eisenstein z, Eisenstein w) {
    const int64_t ac = checked_mul(z.a, w.a);
    const int64_t bd = checked_mul(z.b, w.b);
    const int64_t ad = checked_mul(z.a, w.b);
    const int64_t bc = checked_mul(z.b, w.a);
    return {checked_sub(ac, bd), checked_sub(checked_add(ad, bc), bd)};
}

int64_t norm(Eisenstein z) {
    // a^2 - ab + b^2 = ((a-b)^2 + a^2 + b^2) / 2, hence >= 0 with equality
    // only at the origin.
    const int64_t aa = checked_mul(z.a, z.a);
    const int64_t bb = checked_mul(z.b, z.b);
    const int64_t ab = checked_mul(z.a, z.b);
    return checked_add(checked_sub(aa, ab), bb);
}

Eisenstein conjugate(Eisenstein z) {
    return {checked_sub(z.a, z.b), checked_neg(z.b)};
}

const std::array<Eisenstein, 6>& units() {
    static const std::array<Eisenstein, 6> six = {{
        {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1},
    }};
    return six;
}

std::complex<double> to_cartesian(Eisenstein z) {
    constexpr double half_sqrt3 = 0.8660254037844386467637231707529362;
    return {static_cast<double>(z.a) - static_cast<double>(z.b) / 2.0,
            static_cast<double>(z.b) * half_sqrt3};
}

std::string to_string(Eisenstein z) {
    if (z.a == 0 && z.b == 0) return "0";
    std::ostringstream out;
    if (z.a != 0) out << z.a;
    if (z.b != 0) {
        if (z.b > 0 && z.a != 0) out << '+';
        if (z.b == -1)
            out << '-';
        else if (z.b != 1)
            out << z.b;
        out << "ω";
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, Eisenstein z) {
    return os << to_string(z);
}

}  // namespace equable
