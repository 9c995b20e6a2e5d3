#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace la2 {

// All arithmetic in this library is exact. Pell fundamental solutions
// overflow 64-bit immediately (tau = 61 already needs ten digits), so the
// integer type is GMP's mpz_class throughout.
using Integer = mpz_class;

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
    if (n < 0) {
        throw std::domain_error("isqrt: negative argument");
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// floor(b * sqrt(tau)) for any sign of b; tau must be a positive nonsquare.
// For b != 0 the value is irrational, so the floor of the negative case is
// -isqrt(b^2 tau) - 1.
inline Integer floor_mul_sqrt(const Integer& b, const Integer& tau) {
    if (b == 0) {
        return 0;
    }
    Integer root = isqrt(b * b * tau);
    if (b > 0) {
        return root;
    }
    return -root - 1;
}

inline bool divides(const Integer& d, const Integer& n) {
    if (d == 0) {
        return n == 0;
    }
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees divisibility.
inline Integer exact_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Floor division with positive divisor.
inline Integer floor_div(const Integer& n, const Integer& d) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace la2
