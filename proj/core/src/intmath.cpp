#include "equable/intmath.hpp"

#include <cmath>
#include <stdexcept>

namespace equable {

int64_t integer_sqrt(int64_t n) {
    if (n < 0) throw std::domain_error("integer_sqrt: negative input");
    if (n == 0) return 0;
    const uint64_t un = static_cast<uint64_t>(n);
    // Seed with the double estimate, then Newton steps in integers.
    uint64_t x = static_cast<uint64_t>(std::sqrt(static_cast<double>(un)));
    if (x == 0) x = 1;
    for (;;) {
        const uint64_t y = (x + un / x) / 2;
        if (y >= x) break;
        x = y;
    }
    // The seed can land one step off either side of the floor; pin it down.
    // x <= 3037000499 here, so the squares below stay inside uint64.
    while (x * x > un) --x;
    while ((x + 1) * (x + 1) <= un) ++x;
    return static_cast<int64_t>(x);
}

bool is_perfect_square(int64_t n) {
    const int64_t r = integer_sqrt(n);
    return r * r == n;
}

int64_t squarefree_part(int64_t n) {
    if (n < 1) throw std::domain_error("squarefree_part: input must be >= 1");
    int64_t d = 1;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int exponent = 0;
        while (n % p == 0) {
            n /= p;
            ++exponent;
        }
        if (exponent % 2 == 1) d *= p;
    }
    // Whatever survives the division is 1 or a prime appearing once.
    return d * n;
}

}  // namespace equable
