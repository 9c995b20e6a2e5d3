#include "la2/quad_int.hpp"

#include <ostream>
#include <sstream>

namespace la2 {

int QuadInt::sign() const {
    const int sa = mpz_sgn(a_.get_mpz_t());
    const int sb = mpz_sgn(b_.get_mpz_t());
    if (sa == 0 && sb == 0) {
        return 0;
    }
    if (sa >= 0 && sb >= 0) {
        return +1;
    }
    if (sa <= 0 && sb <= 0) {
        return -1;
    }
    // Mixed signs: |a| vs |b| sqrt(tau), i.e. a^2 vs b^2 tau.
    const Integer lhs = a_ * a_;
    const Integer rhs = b_ * b_ * tau_;
    if (lhs == rhs) {
        // a^2 = b^2 tau with b != 0 would make tau a square of a rational,
        // hence of an integer; the constructor excluded that.
        throw InternalError("QuadInt::sign: a^2 == b^2 tau for nonsquare tau");
    }
    if (sa > 0) {  // a > 0 > b
        return lhs > rhs ? +1 : -1;
    }
    // a < 0 < b
    return rhs > lhs ? +1 : -1;
}

std::string QuadInt::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    if (x.surd_part() == 0) {
        return os << x.rational_part();
    }
    if (x.rational_part() != 0) {
        os << x.rational_part();
        os << (x.surd_part() > 0 ? " + " : " - ");
    } else if (x.surd_part() < 0) {
        os << "-";
    }
    const Integer mag = abs(x.surd_part());
    if (mag != 1) {
        os << mag << "*";
    }
    return os << "sqrt(" << x.tau() << ")";
}

std::strong_ordering compare(const QuadInt& x, const QuadInt& y) {
    const int s = (x - y).sign();
    if (s < 0) {
        return std::strong_ordering::less;
    }
    if (s > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

QuadInt pow(const QuadInt& x, unsigned long m) {
    QuadInt result = QuadInt::one(x.tau());
    QuadInt base = x;
    while (m > 0) {
        if (m & 1) {
            result *= base;
        }
        m >>= 1;
        if (m > 0) {
            base *= base;
        }
    }
    return result;
}

Integer floor_div(const QuadInt& x, const Integer& k) {
    if (k <= 0) {
        throw DomainError("floor_div: divisor must be positive");
    }
    if (x.surd_part() == 0) {
        return floor_div(x.rational_part(), k);
    }
    // a + b sqrt(tau) lies strictly between n and n + 1 where
    // n = a + floor(b sqrt(tau)), so the real floor of x/k equals
    // floor(n / k): the fractional excess below 1 cannot push the
    // quotient past the next integer.
    const Integer n =
        x.rational_part() + floor_mul_sqrt(x.surd_part(), x.tau());
    return floor_div(n, k);
}

}  // namespace la2
