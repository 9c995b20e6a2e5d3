#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "la2/errors.hpp"
#include "la2/integer.hpp"

namespace la2 {

/**
 * An element a + b*sqrt(tau) of the ring Z[sqrt(tau)], tau a positive
 * nonsquare integer.
 *
 * Every comparison classically phrased through logarithms or decimal
 * approximations of sqrt(tau) is decided here with integer arithmetic only:
 * the sign of a + b*sqrt(tau) reduces to comparing a^2 against b^2*tau.
 * Because tau is nonsquare, a + b*sqrt(tau) = 0 forces a = b = 0, so the
 * sign procedure never has to break a tie.
 *
 * The radicand travels with the value; combining operands from different
 * rings is a hard error rather than an implicit coercion.
 */
class QuadInt {
public:
    QuadInt(Integer rational, Integer surd, Integer tau)
        : a_(std::move(rational)), b_(std::move(surd)), tau_(std::move(tau)) {
        check_radicand(tau_);
    }

    static QuadInt zero(const Integer& tau) { return QuadInt(0, 0, tau); }
    static QuadInt one(const Integer& tau) { return QuadInt(1, 0, tau); }
    static QuadInt sqrt_tau(const Integer& tau) { return QuadInt(0, 1, tau); }

    const Integer& rational_part() const noexcept { return a_; }
    const Integer& surd_part() const noexcept { return b_; }
    const Integer& tau() const noexcept { return tau_; }

    QuadInt operator+(const QuadInt& other) const {
        require_same_ring(other);
        return unchecked(a_ + other.a_, b_ + other.b_, tau_);
    }

    QuadInt operator-(const QuadInt& other) const {
        require_same_ring(other);
        return unchecked(a_ - other.a_, b_ - other.b_, tau_);
    }

    QuadInt operator-() const { return unchecked(-a_, -b_, tau_); }

    // (a + b sqrt(tau))(c + d sqrt(tau)) = (ac + bd tau) + (ad + bc) sqrt(tau)
    QuadInt operator*(const QuadInt& other) const {
        require_same_ring(other);
        return unchecked(a_ * other.a_ + b_ * other.b_ * tau_,
                         a_ * other.b_ + b_ * other.a_, tau_);
    }

    QuadInt operator*(const Integer& k) const {
        return unchecked(a_ * k, b_ * k, tau_);
    }

    QuadInt& operator*=(const QuadInt& other) {
        *this = *this * other;
        return *this;
    }

    bool operator==(const QuadInt& other) const {
        require_same_ring(other);
        return a_ == other.a_ && b_ == other.b_;
    }

    // Field norm N(a + b sqrt(tau)) = a^2 - tau b^2.
    Integer norm() const { return a_ * a_ - tau_ * b_ * b_; }

    QuadInt conjugate() const { return unchecked(a_, -b_, tau_); }

    /**
     * Sign of the real number a + b*sqrt(tau), by integer arithmetic:
     * when the terms have mixed signs, compare a^2 with b^2*tau. Equality
     * of the squares is impossible for b != 0 since tau is nonsquare.
     */
    int sign() const;

    bool is_positive() const { return sign() > 0; }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& x);

private:
    // Results of arithmetic stay in an already-validated ring.
    static QuadInt unchecked(Integer a, Integer b, Integer tau) {
        QuadInt r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.tau_ = std::move(tau);
        return r;
    }

    static void check_radicand(const Integer& tau) {
        if (tau <= 0) {
            throw DomainError("QuadInt: radicand must be positive, got " +
                              tau.get_str());
        }
        if (is_perfect_square(tau)) {
            throw DomainError("QuadInt: radicand " + tau.get_str() +
                              " is a perfect square; the ordering of "
                              "Z[sqrt(tau)] is only sound for nonsquare tau");
        }
    }

    void require_same_ring(const QuadInt& other) const {
        if (tau_ != other.tau_) {
            throw RingMismatchError("QuadInt: mixed radicands " +
                                    tau_.get_str() + " and " +
                                    other.tau_.get_str());
        }
    }

    QuadInt() = default;

    Integer a_;
    Integer b_;
    Integer tau_;
};

// Ordering of the corresponding real numbers, via the sign of x - y.
std::strong_ordering compare(const QuadInt& x, const QuadInt& y);

inline bool operator<(const QuadInt& x, const QuadInt& y) {
    return compare(x, y) == std::strong_ordering::less;
}
inline bool operator<=(const QuadInt& x, const QuadInt& y) {
    return compare(x, y) != std::strong_ordering::greater;
}
inline bool operator>(const QuadInt& x, const QuadInt& y) {
    return compare(x, y) == std::strong_ordering::greater;
}
inline bool operator>=(const QuadInt& x, const QuadInt& y) {
    return compare(x, y) != std::strong_ordering::less;
}

// Exact m-th power, m >= 0; pow(x, 0) is the ring identity.
QuadInt pow(const QuadInt& x, unsigned long m);

// floor((a + b*sqrt(tau)) / k) for a positive integer k, computed exactly
// via integer square roots.
Integer floor_div(const QuadInt& x, const Integer& k);

}  // namespace la2
