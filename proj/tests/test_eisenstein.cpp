#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>

#include "equable/eisenstein.hpp"
#include "equable/intmath.hpp"

using namespace equable;

namespace {

std::mt19937_64 rng(20260815);

Eisenstein random_point(int64_t box) {
    std::uniform_int_distribution<int64_t> coeff(-box, box);
    return {coeff(rng), coeff(rng)};
}

}  // namespace

TEST_SUITE("eisenstein") {

TEST_CASE("multiplication follows the omega relation") {
    const Eisenstein w{0, 1};
    CHECK(w * w == Eisenstein{-1, -1});           // omega^2 = -1 - omega
    CHECK(Eisenstein{1, 1} * Eisenstein{1, 1} == w);
    CHECK(w * w * w == Eisenstein{1, 0});         // cube root of unity
}

TEST_CASE("addition and negation are componentwise") {
    CHECK(Eisenstein{8, 4} + (-Eisenstein{4, 8}) == Eisenstein{4, -4});
    CHECK(Eisenstein{8, 4} - Eisenstein{4, 8} == Eisenstein{4, -4});
    CHECK(-Eisenstein{0, 0} == Eisenstein{0, 0});
}

TEST_CASE("norm values of the classified vertices") {
    CHECK(norm(Eisenstein{8, 4}) == 48);
    CHECK(norm(Eisenstein{4, 8}) == 48);
    CHECK(norm(Eisenstein{0, 0}) == 0);
    CHECK(norm(Eisenstein{6, 3}) == 27);
    CHECK(norm(Eisenstein{8, 16}) == 192);
    CHECK(norm(Eisenstein{-2, -13}) == 147);
}

TEST_CASE("norm is positive definite and multiplicative") {
    for (int trial = 0; trial < 10000; ++trial) {
        const Eisenstein z = random_point(1000);
        const Eisenstein w = random_point(1000);
        const int64_t nz = norm(z);
        REQUIRE(nz >= 0);
        REQUIRE((nz == 0) == (z == Eisenstein{0, 0}));
        REQUIRE(norm(z * w) == nz * norm(w));
    }
}

TEST_CASE("norm equals the squared cartesian length") {
    for (int trial = 0; trial < 2000; ++trial) {
        const Eisenstein z = random_point(1000);
        const std::complex<double> c = to_cartesian(z);
        const double squared = c.real() * c.real() + c.imag() * c.imag();
        REQUIRE(std::llround(squared) == norm(z));
        REQUIRE(std::abs(squared - static_cast<double>(norm(z))) < 1e-9);
    }
}

TEST_CASE("conjugation: examples, involution, ring homomorphism") {
    CHECK(conjugate(Eisenstein{0, 1}) == Eisenstein{-1, -1});  // conj(omega)
    CHECK(conjugate(Eisenstein{5, 0}) == Eisenstein{5, 0});
    CHECK(norm(conjugate(Eisenstein{8, 16})) == 192);
    for (int trial = 0; trial < 2000; ++trial) {
        const Eisenstein z = random_point(1000);
        const Eisenstein w = random_point(1000);
        REQUIRE(conjugate(conjugate(z)) == z);
        REQUIRE(conjugate(z + w) == conjugate(z) + conjugate(w));
        REQUIRE(conjugate(z * w) == conjugate(z) * conjugate(w));
        REQUIRE(norm(conjugate(z)) == norm(z));
    }
}

TEST_CASE("exactly six units, closed under product and conjugation") {
    const auto& u = units();
    CHECK(u.size() == 6);
    const std::set<Eisenstein> unit_set(u.begin(), u.end());
    CHECK(unit_set.size() == 6);
    CHECK(unit_set.count(Eisenstein{1, 1}) == 1);
    CHECK(unit_set.count(Eisenstein{2, 0}) == 0);
    for (const Eisenstein& x : u) {
        CHECK(norm(x) == 1);
        CHECK(unit_set.count(conjugate(x)) == 1);
        for (const Eisenstein& y : u) CHECK(unit_set.count(x * y) == 1);
    }
    // brute force over the coefficient box confirms there are no others
    int found = 0;
    for (int64_t a = -2; a <= 2; ++a)
        for (int64_t b = -2; b <= 2; ++b)
            if (norm(Eisenstein{a, b}) == 1) {
                ++found;
                CHECK(unit_set.count(Eisenstein{a, b}) == 1);
            }
    CHECK(found == 6);
}

TEST_CASE("cartesian embedding") {
    const double sqrt3 = std::sqrt(3.0);
    const std::complex<double> one = to_cartesian(Eisenstein{1, 0});
    CHECK(one.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.imag() == doctest::Approx(0.0).epsilon(1e-12));
    const std::complex<double> w = to_cartesian(Eisenstein{0, 1});
    CHECK(w.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(w.imag() == doctest::Approx(sqrt3 / 2).epsilon(1e-12));
    const std::complex<double> v = to_cartesian(Eisenstein{8, 4});
    CHECK(v.real() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(2 * sqrt3).epsilon(1e-12));
}

TEST_CASE("text form") {
    CHECK(to_string(Eisenstein{0, 0}) == "0");
    CHECK(to_string(Eisenstein{1, 0}) == "1");
    CHECK(to_string(Eisenstein{-1, 0}) == "-1");
    CHECK(to_string(Eisenstein{0, 1}) == "ω");
    CHECK(to_string(Eisenstein{0, -1}) == "-ω");
    CHECK(to_string(Eisenstein{-1, -1}) == "-1-ω");
    CHECK(to_string(Eisenstein{8, 4}) == "8+4ω");
    CHECK(to_string(Eisenstein{4, -4}) == "4-4ω");
    CHECK(to_string(Eisenstein{-2, -13}) == "-2-13ω");
}

TEST_CASE("arithmetic overflow throws instead of wrapping") {
    const int64_t big = INT64_MAX;
    CHECK_THROWS_AS((void)(Eisenstein{big, 0} + Eisenstein{1, 0}), std::overflow_error);
    CHECK_THROWS_AS((void)(Eisenstein{INT64_MIN, 0} - Eisenstein{1, 0}), std::overflow_error);
    CHECK_THROWS_AS((void)(-Eisenstein{INT64_MIN, 0}), std::overflow_error);
    CHECK_THROWS_AS((void)(Eisenstein{int64_t{1} << 32, 0} * Eisenstein{int64_t{1} << 32, 0}),
                    std::overflow_error);
    CHECK_THROWS_AS((void)norm(Eisenstein{big, 0}), std::overflow_error);
}

TEST_CASE("integer_sqrt is the exact floor") {
    CHECK(integer_sqrt(0) == 0);
    CHECK(integer_sqrt(1) == 1);
    CHECK(integer_sqrt(2) == 1);
    CHECK(integer_sqrt(3) == 1);
    CHECK(integer_sqrt(4) == 2);
    CHECK(integer_sqrt(48) == 6);
    CHECK(integer_sqrt(1000000000000000000) == 1000000000);
    CHECK(integer_sqrt(INT64_MAX) == 3037000499);
    CHECK_THROWS_AS(integer_sqrt(-1), std::domain_error);

    for (int64_t n = 0; n <= 1000000; ++n) {
        const int64_t r = integer_sqrt(n);
        if (!(r * r <= n && n < (r + 1) * (r + 1))) {
            REQUIRE(r * r <= n);
            REQUIRE(n < (r + 1) * (r + 1));
        }
    }
    std::uniform_int_distribution<int64_t> large(int64_t{1} << 40, INT64_MAX);
    for (int trial = 0; trial < 2000; ++trial) {
        const int64_t n = large(rng);
        const uint64_t r = static_cast<uint64_t>(integer_sqrt(n));
        REQUIRE(r * r <= static_cast<uint64_t>(n));
        REQUIRE((r + 1) * (r + 1) > static_cast<uint64_t>(n));
    }
}

TEST_CASE("perfect square detection") {
    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(49));
    CHECK_FALSE(is_perfect_square(48));
    CHECK_THROWS_AS(is_perfect_square(-4), std::domain_error);
    std::uniform_int_distribution<int64_t> ks(1, 1000000);
    for (int trial = 0; trial < 2000; ++trial) {
        const int64_t k = ks(rng);
        REQUIRE(is_perfect_square(k * k));
        REQUIRE_FALSE(is_perfect_square(k * k + 1));
        if (k > 1) REQUIRE_FALSE(is_perfect_square(k * k - 1));
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(48) == 3);
    CHECK(squarefree_part(1) == 1);
    CHECK(squarefree_part(147) == 3);
    CHECK_THROWS_AS(squarefree_part(0), std::domain_error);
    CHECK_THROWS_AS(squarefree_part(-12), std::domain_error);

    // slow independent oracle: divide out the largest square divisor
    for (int64_t n = 1; n <= 10000; ++n) {
        int64_t best = 1;
        for (int64_t k = 1; k * k <= n; ++k)
            if (n % (k * k) == 0) best = k;
        REQUIRE(squarefree_part(n) == n / (best * best));
    }
    for (int64_t n = 1; n <= 100000; ++n) {
        const int64_t d = squarefree_part(n);
        REQUIRE(n % d == 0);
        REQUIRE(is_perfect_square(n / d));
        REQUIRE(squarefree_part(d) == d);
    }
}

}  // TEST_SUITE
