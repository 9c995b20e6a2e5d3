#pragma once

#include <random>
#include <vector>

#include "la2/equation.hpp"
#include "la2/quad_int.hpp"

namespace la2::testing {

// Worked examples used throughout the suite.
inline LA2Equation e1() { return LA2Equation(1, 0, -2, -6, 8, 0); }
inline LA2Equation e2() { return LA2Equation(1, 2, -2, 0, -6, -4); }
// Pell's equation u^2 - 2 v^2 = 1 itself (zero shifts).
inline LA2Equation pell_eq() { return LA2Equation(1, 0, -2, 0, 0, -1); }

// 256-bit binary float evaluation of a + b sqrt(tau); the independent
// cross-check path. Exact arithmetic must agree with it on every decision
// the suite makes.
inline mpf_class to_mpf256(const QuadInt& x) {
    constexpr mp_bitcnt_t kPrec = 256;
    mpf_class root(0, kPrec);
    mpf_sqrt(root.get_mpf_t(), mpf_class(x.tau(), kPrec).get_mpf_t());
    mpf_class value(0, kPrec);
    value = mpf_class(x.rational_part(), kPrec) +
            mpf_class(x.surd_part(), kPrec) * root;
    return value;
}

inline int mpf_sign(const mpf_class& x) { return mpf_sgn(x.get_mpf_t()); }

struct RandomQuadInt {
    std::mt19937_64 rng{20240814};
    std::uniform_int_distribution<long> coeff{-1000000, 1000000};
    std::vector<long> nonsquare_taus{2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 61, 94};

    QuadInt next(const Integer& tau) {
        return QuadInt(coeff(rng), coeff(rng), tau);
    }

    Integer next_tau() {
        std::uniform_int_distribution<std::size_t> pick(
            0, nonsquare_taus.size() - 1);
        return nonsquare_taus[pick(rng)];
    }
};

}  // namespace la2::testing
