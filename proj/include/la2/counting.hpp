#pragma once

#include <array>
#include <utility>
#include <vector>

#include "la2/equation.hpp"
#include "la2/integer.hpp"
#include "la2/pell.hpp"
#include "la2/quad_int.hpp"

namespace la2 {

// Which side of (-1)^(l-1) sqrt(tau) the half-coefficient lambda falls on.
// Exactly one side holds because sqrt(tau) is irrational.
enum class BranchSide { Below, Above };

/**
 * The constants of branch l:
 *   P_l  in Z[sqrt(tau)], always of the form integer +- sqrt(tau), positive;
 *   Q_l  an integer;
 *   R_l  in {0, 1}.
 * All three case distinctions are decided by exact sign computations in
 * Z[sqrt(tau)].
 */
struct BranchParameters {
    int l;
    QuadInt P;
    Integer Q;
    int R;
    BranchSide side;
};

/**
 * The validity thresholds of the closed-form count:
 *   n0       least index from which the Pell sequence dominates the shifts;
 *   nl[l-1]  per-branch index N_l;
 *   m_prime[l-1]  M'_l, the least region size at which branch l's count
 *                 formula is exact;
 *   big_l    L = max of the four M'_l, the least x at which the full
 *            counting formula applies.
 */
struct Thresholds {
    long n0 = 0;
    std::array<long, 4> nl{};
    std::array<Integer, 4> m_prime{};
    Integer big_l;
};

struct BranchPoint {
    long m;
    Integer u;
    Integer v;
};

/**
 * The explicit solution set inside |u| + |v| <= x: the two class-0 points
 * plus, per branch, the points (m, s_m, t_m) for m = 1..count_branch.
 */
struct SolutionSet {
    std::array<std::pair<Integer, Integer>, 2> class0;
    std::array<std::vector<BranchPoint>, 4> branches;

    // All points, sorted lexicographically by (u, v).
    std::vector<std::pair<Integer, Integer>> sorted() const;
    std::size_t size() const;
};

// Requires reduced.j = 1.
BranchParameters branch_parameters(const ReducedForm& reduced, int l);

/**
 * N_0: the least m with
 *   u_m > |lambda| v_m + |shift_u| and v_m > |E/D|   (|lambda| < sqrt(tau))
 *   u_m < |lambda| v_m - |shift_u| and v_m > |E/D|   (|lambda| > sqrt(tau)),
 * found by iterating the Pell recurrence from m = 1. Termination is
 * guaranteed; the cap exists only to fail fast on an implementation bug.
 */
long compute_n0(const ReducedForm& reduced, const PellFundamental& fund);

/**
 * N_l: 1 when |lambda| < sqrt(tau); otherwise the least m >= 1 with
 *   2 sqrt(tau) (alpha + beta sqrt(tau))^m > 1 + |lambda| - (-1)^l sgn(lambda) sqrt(tau)
 * in exact comparison. This equals the classical ceiling-of-logarithm form
 * because the compared ratio is never exactly a power of the fundamental
 * unit.
 */
long compute_nl(const ReducedForm& reduced, const PellFundamental& fund, int l);

/**
 * All thresholds. M'_l is computed as
 *   max{|s_1|, |s_N0|, |s_Nl|} + max{|t_1|, |t_N0|, |t_Nl|}
 * and re-derived through the equivalent two-term form
 *   max{|s_1|, |s_max(N0,Nl)|} + max{|t_1|, |t_max(N0,Nl)|};
 * a mismatch throws InternalError.
 */
Thresholds compute_thresholds(const ReducedForm& reduced,
                              const PellFundamental& fund);

/**
 * Number of branch-l solutions inside |u| + |v| <= x for x_floor >= M'_l:
 *   max{ m >= 0 : P_l (alpha + beta sqrt(tau))^m <= 2 sqrt(tau) K },
 * K = x_floor - R_l + 1 - Q_l, by an exact multiply-and-compare loop. This
 * is the floor of the logarithm expression; ties cannot occur at valid
 * inputs, and <= fixes the behavior everywhere else. Throws ThresholdError
 * when x_floor < min_x (= M'_l).
 */
long count_branch(const ReducedForm& reduced, const PellFundamental& fund,
                  const BranchParameters& params, const Integer& x_floor,
                  const Integer& min_x);

/**
 * |D_A(x)| = 2 + sum of the four branch counts, for x_floor >= L.
 * Throws ClassificationError / UnsupportedClassError / ThresholdError.
 */
Integer count_solutions(const LA2Equation& eq, const Integer& x_floor);

// The explicit set behind count_solutions; every returned point is verified
// to solve the equation and to lie inside the region.
SolutionSet enumerate_solutions(const LA2Equation& eq, const Integer& x_floor);

}  // namespace la2
