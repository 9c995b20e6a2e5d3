#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "la2/counting.hpp"
#include "la2/equation.hpp"
#include "la2/integer.hpp"

namespace la2 {

inline constexpr long kDefaultOracleCap = 100000;

/**
 * Ground truth by direct enumeration of the region |u| + |v| <= x. The
 * solution list is sorted lexicographically by (u, v), so reports compare
 * deterministically.
 */
struct OracleReport {
    Integer x;
    std::vector<std::pair<Integer, Integer>> solutions;
    double elapsed_seconds = 0.0;

    std::size_t count() const { return solutions.size(); }
};

enum class OracleMode {
    // Per v, solve the quadratic in u with an exact integer square root of
    // the discriminant: O(x) instead of O(x^2).
    QuadraticSolve,
    // Evaluate every lattice point of the region. Kept as the reference
    // the fast mode is tested against.
    NaiveScan,
};

/**
 * Every integer solution with |u| + |v| <= x. Works for any coefficients
 * with a > 0, not just LA2-type equations, so rejected equations still get
 * ground-truth counts. Throws CapExceededError when x exceeds `cap` (the
 * scan is linear in x but unbounded input should fail fast).
 */
OracleReport brute_force_solutions(const LA2Equation& eq, const Integer& x,
                                   const Integer& cap = kDefaultOracleCap,
                                   OracleMode mode = OracleMode::QuadraticSolve);

/**
 * Formula-vs-oracle comparison at one x. Below the threshold L the formula
 * does not apply and only the oracle side is filled in.
 */
struct VerificationReport {
    Integer x_floor;
    Integer threshold;        // L of the equation
    bool formula_applicable;  // x_floor >= L
    OracleReport oracle;
    // Set only when the formula applies:
    std::optional<Integer> formula_count;
    std::optional<bool> match;
    std::vector<std::pair<Integer, Integer>> missing;  // oracle-only points
    std::vector<std::pair<Integer, Integer>> extra;    // formula-only points
};

// Requires classify(eq) = LA2 with j = 1; throws like count_solutions.
VerificationReport verify(const LA2Equation& eq, const Integer& x_floor,
                          const Integer& cap = kDefaultOracleCap);

}  // namespace la2
