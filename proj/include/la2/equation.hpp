#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "la2/errors.hpp"
#include "la2/integer.hpp"
#include "la2/pell.hpp"

namespace la2 {

/**
 * Coefficients of a u^2 + b uv + c v^2 + d u + e v + f = 0 with a > 0.
 * A coefficient gcd != 1 is not rejected here; the classifier reports it
 * as a structural failure together with the normalized equation, so the
 * CLI can explain near-misses instead of silently rewriting input.
 */
struct LA2Equation {
    Integer a, b, c, d, e, f;

    LA2Equation(Integer a_, Integer b_, Integer c_, Integer d_, Integer e_,
                Integer f_)
        : a(std::move(a_)),
          b(std::move(b_)),
          c(std::move(c_)),
          d(std::move(d_)),
          e(std::move(e_)),
          f(std::move(f_)) {
        if (a <= 0) {
            throw DomainError("LA2Equation: leading coefficient a must be positive");
        }
    }

    bool operator==(const LA2Equation&) const = default;
};

/**
 * D = b^2 - 4ac, E = bd - 2ae, F = d^2 - 4af, N = E^2 - DF, plus the
 * quotients lambda = b/2, tau = D/4, E/D, d/2 and j = N / (-4 a^2 D),
 * each present only when the corresponding divisibility holds. Absence is
 * data, not an error.
 */
struct DerivedQuantities {
    Integer D, E, F, N;
    std::optional<Integer> lambda;
    std::optional<Integer> tau;
    std::optional<Integer> e_over_d;
    std::optional<Integer> half_d;
    std::optional<Integer> j;
};

// Identifiers for the classification checks: the four numbered conditions
// plus the structural requirements on a and the coefficient gcd.
enum class ClassCondition {
    APositive,        // a > 0
    GcdOne,           // gcd(a,..,f) = 1
    DNonsquare,       // (i)   D > 0 and nonsquare
    DDividesE,        // (ii)  D | E
    HalfDivisibility, // (iii) 2a | b, a | c, 2a | d
    NDivisibility,    // (iv)  4 a^2 D | N
};

std::string condition_name(ClassCondition c);

struct ClassificationReport {
    bool la2 = false;
    std::vector<ClassCondition> failed;
    std::optional<Integer> j;  // set iff la2
    DerivedQuantities derived;
    Integer coefficient_gcd = 1;
    // Present when coefficient_gcd != 1: the input divided through by it.
    std::optional<LA2Equation> normalized;
};

// reduce() on a non-LA2 equation carries the full report out.
struct ClassificationError : std::runtime_error {
    explicit ClassificationError(ClassificationReport report_);
    ClassificationReport report;
};

/**
 * The reduced Pell form u~^2 - tau v~^2 = j together with the affine maps
 * between (u, v) and (u~, v~):
 *   forward  (u, v)   -> (u + lambda v + d/2, v + E/D)
 *   inverse  (u~, v~) -> (u~ - lambda v~ + shift_u, v~ + shift_v)
 * with shift_u = (E/D) lambda - d/2 and shift_v = -E/D. The two maps are
 * mutually inverse bijections of Z^2.
 */
struct ReducedForm {
    Integer tau;
    Integer j;
    Integer lambda;
    Integer e_over_d;
    Integer half_d;
    Integer shift_u;
    Integer shift_v;

    std::pair<Integer, Integer> forward(const Integer& u,
                                        const Integer& v) const {
        return {u + lambda * v + half_d, v + e_over_d};
    }

    std::pair<Integer, Integer> inverse(const Integer& ut,
                                        const Integer& vt) const {
        return {ut - lambda * vt + shift_u, vt + shift_v};
    }
};

DerivedQuantities derive(const LA2Equation& eq);

/**
 * Checks, in order: a > 0, gcd = 1, conditions (i)-(iv). All failures are
 * reported, not just the first. A passing equation necessarily has a = 1
 * (a divides every coefficient, and the gcd is 1); this is asserted.
 */
ClassificationReport classify(const LA2Equation& eq);

// Throws ClassificationError when classify(eq) is not LA2.
ReducedForm reduce(const LA2Equation& eq);

// Exact value of a u^2 + b uv + c v^2 + d u + e v + f; zero iff (u, v)
// solves the equation.
Integer evaluate(const LA2Equation& eq, const Integer& u, const Integer& v);

/**
 * Branch-l solution (s_m, t_m), l in {1,2,3,4}, m >= 1:
 *   s_m = (-1)^floor(l/2) u_m - (-1)^floor((l-1)/2) lambda v_m + shift_u
 *   t_m = (-1)^floor((l-1)/2) v_m + shift_v
 * Requires j = 1.
 */
std::pair<Integer, Integer> branch_solution(const ReducedForm& reduced,
                                            const PellFundamental& fund,
                                            int l, long m);

// Images of (+1, 0) and (-1, 0) under the inverse map; requires j = 1.
std::pair<std::pair<Integer, Integer>, std::pair<Integer, Integer>>
class0_solutions(const ReducedForm& reduced);

/**
 * Inverse construction: the equation with lambda = b/2, tau = D/4,
 * E/D = p, d/2 = q, which always classifies as LA2 with j = 1:
 *   (a..f) = (1, 2 lambda, lambda^2 - tau, 2q, 2 lambda q - 2 tau p,
 *             q^2 - tau p^2 - 1).
 */
LA2Equation make_z1_equation(const Integer& lambda, const Integer& tau,
                             const Integer& p, const Integer& q);

}  // namespace la2
