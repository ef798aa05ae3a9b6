#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace equable {

// Overflow-checked 64-bit arithmetic. Every pipeline in this project keeps
// coefficients far below 2^63 (the classification itself only needs norms of
// a few hundred), so a failed check signals misuse and throws
// std::overflow_error instead of wrapping.
int64_t checked_add(int64_t x, int64_t y);
int64_t checked_sub(int64_t x, int64_t y);
int64_t checked_mul(int64_t x, int64_t y);
int64_t checked_neg(int64_t x);

/**
 * Eisenstein integer a + b*omega, where omega = -1/2 + i*sqrt(3)/2 is a
 * primitive cube root of unity. The pair (a, b) are the omega-coordinates
 * of a point of the triangular lattice generated by 1 and omega.
 *
 * Values are immutable in spirit: every operation returns a fresh value,
 * nothing mutates in place, so they can be shared across threads freely.
 */
struct Eisenstein {
    int64_t a = 0;  // coefficient of 1
    int64_t b = 0;  // coefficient of omega

    constexpr Eisenstein() = default;
    constexpr Eisenstein(int64_t a_, int64_t b_) : a(a_), b(b_) {}

    friend constexpr bool operator==(const Eisenstein&, const Eisenstein&) = default;
    // Lexicographic in (a, b). Carries no arithmetic meaning; it exists so
    // containers and canonical forms have a deterministic order.
    friend constexpr auto operator<=>(const Eisenstein&, const Eisenstein&) = default;
};

Eisenstein operator+(Eisenstein z, Eisenstein w);
Eisenstein operator-(Eisenstein z, Eisenstein w);
Eisenstein operator-(Eisenstein z);

/// Ring product. omega^2 = -1 - omega forces
/// (a + b*w)(c + d*w) = (ac - bd) + (ad + bc - bd)*w.
Eisenstein operator*(Eisenstein z, Eisenstein w);

/// Squared Euclidean length a^2 - ab + b^2. Nonnegative, zero only at the
/// origin, and multiplicative: norm(z*w) = norm(z)*norm(w).
int64_t norm(Eisenstein z);

/// Complex conjugation: a + b*w maps to (a - b) - b*w, since conj(w) = -1-w.
/// Norm-preserving reflection of the lattice.
Eisenstein conjugate(Eisenstein z);

/// The six elements of norm 1: +-1, +-w, +-(1+w). Multiplication by a unit
/// is a rotation of the lattice by a multiple of 60 degrees.
const std::array<Eisenstein, 6>& units();

/// Embedding into the plane: (a - b/2, b*sqrt(3)/2). Exact computation never
/// routes through this; it serves rendering and floating-point cross-checks.
std::complex<double> to_cartesian(Eisenstein z);

/// "8+4ω", "-1-ω", "ω", "0", ...
std::string to_string(Eisenstein z);
std::ostream& operator<<(std::ostream& os, Eisenstein z);

}  // namespace equable
