#pragma once

#include <utility>
#include <vector>

#include "la2/integer.hpp"
#include "la2/quad_int.hpp"

namespace la2 {

/**
 * Minimal solution (alpha, beta) of u^2 - tau v^2 = 1 with
 * alpha + beta*sqrt(tau) > 1.
 */
struct PellFundamental {
    Integer tau;
    Integer alpha;
    Integer beta;

    QuadInt unit() const { return QuadInt(alpha, beta, tau); }
};

/**
 * One solution of the Pell equation, tagged with the class it belongs to
 * in the five-class partition of the solution set. class_index 0 holds the
 * trivial pair (+-1, 0); classes 1..4 are the four sign patterns
 * ((-1)^floor(l/2) u_m, (-1)^floor((l-1)/2) v_m). `order` is the index m
 * (1 for class 0).
 */
struct PellPoint {
    Integer u;
    Integer v;
    int class_index;
    long order;
};

// Which of the two class-0 points (+1, 0) / (-1, 0) is requested.
enum class Class0Point { Plus, Minus };

struct CFExpansion {
    Integer a0;                   // floor(sqrt(tau))
    std::vector<Integer> period;  // full period, last term = 2*a0
};

// Sign pattern of class l in {1,2,3,4}: (-1)^floor(l/2) on u and
// (-1)^floor((l-1)/2) on v.
inline int u_sign(int l) { return (l == 1 || l == 4) ? +1 : -1; }
inline int v_sign(int l) { return (l == 1 || l == 2) ? +1 : -1; }

/**
 * Continued fraction of sqrt(tau) by the integer recurrence
 *   m_{k+1} = d_k a_k - m_k,
 *   d_{k+1} = (tau - m_{k+1}^2) / d_k,
 *   a_{k+1} = floor((a0 + m_{k+1}) / d_{k+1}),
 * from (m_0, d_0, a_0) = (0, 1, floor(sqrt(tau))), stopping at the first
 * a_k = 2 a0. Throws DomainError for square or tau < 2, CapExceededError
 * if the period exceeds `max_period` (bounded behavior for a CLI tool).
 */
CFExpansion cf_expand_sqrt(const Integer& tau, std::size_t max_period = 1000000);

/**
 * Fundamental solution of u^2 - tau v^2 = 1 from the convergent at the end
 * of the first period (even period length) or the second (odd). Results
 * are memoized per tau; counting hits the same radicand repeatedly.
 */
PellFundamental fundamental_solution(const Integer& tau);

/**
 * (u_m, v_m) for m >= 1, by the integer recurrence
 *   u_{k+1} = alpha u_k + tau beta v_k,  v_{k+1} = beta u_k + alpha v_k
 * from (u_1, v_1) = (alpha, beta); equal to the rational and surd parts of
 * (alpha + beta sqrt(tau))^m.
 */
std::pair<Integer, Integer> pell_sequence(const PellFundamental& fund, long m);

// Class-l point for l in {1,2,3,4}, order m >= 1.
PellPoint pell_class_point(const PellFundamental& fund, int l, long m);

// The two-element class 0; the (+-) selection is explicit rather than a
// meaningless m.
PellPoint pell_class0_point(const PellFundamental& fund, Class0Point which);

}  // namespace la2
