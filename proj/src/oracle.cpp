#include "la2/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace la2 {

namespace {

using Clock = std::chrono::steady_clock;

// Roots of a u^2 + B u + C = 0 over the integers, via an exact integer
// square root of the discriminant. Floating point never touches the
// perfect-square test.
void solve_quadratic_in_u(const Integer& a, const Integer& B,
                          const Integer& C, const Integer& v,
                          const Integer& x,
                          std::vector<std::pair<Integer, Integer>>& out) {
    const Integer disc = B * B - 4 * a * C;
    if (disc < 0) {
        return;
    }
    const Integer root = isqrt(disc);
    if (root * root != disc) {
        return;
    }
    const Integer two_a = 2 * a;
    for (const Integer& num : {Integer(-B + root), Integer(-B - root)}) {
        if (!divides(two_a, num)) {
            continue;
        }
        Integer u = exact_div(num, two_a);
        if (abs(u) + abs(v) <= x) {
            out.emplace_back(std::move(u), v);
        }
    }
}

}  // namespace

OracleReport brute_force_solutions(const LA2Equation& eq, const Integer& x,
                                   const Integer& cap, OracleMode mode) {
    if (x < 0) {
        throw DomainError("brute_force_solutions: x must be nonnegative");
    }
    if (x > cap) {
        throw CapExceededError("brute_force_solutions: x = " + x.get_str() +
                               " exceeds the scan cap " + cap.get_str() +
                               " (override with LA2_ORACLE_CAP)");
    }

    const auto start = Clock::now();
    OracleReport report;
    report.x = x;

    if (mode == OracleMode::QuadraticSolve) {
        for (Integer v = -x; v <= x; ++v) {
            const Integer B = eq.b * v + eq.d;
            const Integer C = eq.c * v * v + eq.e * v + eq.f;
            solve_quadratic_in_u(eq.a, B, C, v, x, report.solutions);
        }
    } else {
        for (Integer v = -x; v <= x; ++v) {
            const Integer u_span = x - abs(v);
            for (Integer u = -u_span; u <= u_span; ++u) {
                if (evaluate(eq, u, v) == 0) {
                    report.solutions.emplace_back(u, v);
                }
            }
        }
    }

    std::sort(report.solutions.begin(), report.solutions.end());
    report.solutions.erase(
        std::unique(report.solutions.begin(), report.solutions.end()),
        report.solutions.end());
    report.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

VerificationReport verify(const LA2Equation& eq, const Integer& x_floor,
                          const Integer& cap) {
    const ReducedForm reduced = reduce(eq);
    if (reduced.j != 1) {
        throw UnsupportedClassError(reduced.j);
    }
    const PellFundamental fund = fundamental_solution(reduced.tau);
    const Thresholds thr = compute_thresholds(reduced, fund);

    VerificationReport report;
    report.x_floor = x_floor;
    report.threshold = thr.big_l;
    report.formula_applicable = x_floor >= thr.big_l;
    report.oracle = brute_force_solutions(eq, x_floor, cap);
    if (!report.formula_applicable) {
        return report;
    }

    report.formula_count = count_solutions(eq, x_floor);
    const auto formula_set = enumerate_solutions(eq, x_floor).sorted();

    std::set_difference(report.oracle.solutions.begin(),
                        report.oracle.solutions.end(), formula_set.begin(),
                        formula_set.end(), std::back_inserter(report.missing));
    std::set_difference(formula_set.begin(), formula_set.end(),
                        report.oracle.solutions.begin(),
                        report.oracle.solutions.end(),
                        std::back_inserter(report.extra));
    report.match = report.missing.empty() && report.extra.empty() &&
                   *report.formula_count ==
                       Integer(static_cast<long>(report.oracle.count()));
    return report;
}

}  // namespace la2
