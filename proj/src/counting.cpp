#include "la2/counting.hpp"

#include <algorithm>

namespace la2 {

namespace {

constexpr long kIterationCap = 100000;

// (-1)^l
int minus_one_pow(int l) { return (l % 2 == 0) ? +1 : -1; }

int sign_of(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }

// Strict sign of a QuadInt that is provably nonzero (an integer offset of
// sqrt(tau) with tau nonsquare); sign 0 would be an arithmetic bug.
int strict_sign(const QuadInt& x) {
    const int s = x.sign();
    if (s == 0) {
        throw InternalError("counting: tie in an irrational comparison");
    }
    return s;
}

void require_z1(const ReducedForm& reduced) {
    if (reduced.j != 1) {
        throw UnsupportedClassError(reduced.j);
    }
}

void require_same_radicand(const ReducedForm& reduced,
                           const PellFundamental& fund) {
    if (fund.tau != reduced.tau) {
        throw RingMismatchError("counting: fundamental solution is for tau = " +
                                fund.tau.get_str() +
                                ", equation reduces to tau = " +
                                reduced.tau.get_str());
    }
}

Integer abs_sum(const std::pair<Integer, Integer>& st) {
    return abs(st.first) + abs(st.second);
}

}  // namespace

std::vector<std::pair<Integer, Integer>> SolutionSet::sorted() const {
    std::vector<std::pair<Integer, Integer>> all;
    all.reserve(size());
    all.push_back(class0[0]);
    all.push_back(class0[1]);
    for (const auto& branch : branches) {
        for (const auto& point : branch) {
            all.emplace_back(point.u, point.v);
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::size_t SolutionSet::size() const {
    std::size_t n = 2;
    for (const auto& branch : branches) {
        n += branch.size();
    }
    return n;
}

BranchParameters branch_parameters(const ReducedForm& reduced, int l) {
    require_z1(reduced);
    if (l < 1 || l > 4) {
        throw DomainError("branch_parameters: branch index must be in 1..4");
    }
    const Integer& tau = reduced.tau;
    const Integer& lambda = reduced.lambda;
    const int pl = minus_one_pow(l);

    // lambda vs (-1)^(l-1) sqrt(tau): sign of lambda - (-pl) sqrt(tau).
    const BranchSide side =
        strict_sign(QuadInt(lambda, pl, tau)) < 0 ? BranchSide::Below
                                                  : BranchSide::Above;

    QuadInt P = side == BranchSide::Below
                    ? QuadInt(1 - lambda, -pl, tau)
                    : QuadInt(1 + lambda, pl, tau);
    if (!P.is_positive()) {
        throw InternalError("branch_parameters: P_l is not positive");
    }

    const Integer base = reduced.e_over_d * lambda - reduced.half_d;
    Integer Q = side == BranchSide::Below
                    ? Integer(v_sign(l) * (base - reduced.e_over_d))
                    : Integer(-v_sign(l) * (base + reduced.e_over_d));

    // R_l = 1 inside the window (-sqrt(tau) + c1, sqrt(tau) - c2) with
    // (c1, c2) = (1, 0) for odd l and (0, 1) for even l.
    const int c1 = (l % 2 != 0) ? 1 : 0;
    const int c2 = 1 - c1;
    const bool above_left = strict_sign(QuadInt(lambda - c1, 1, tau)) > 0;
    const bool below_right = strict_sign(QuadInt(-lambda - c2, 1, tau)) > 0;
    const int R = (above_left && below_right) ? 1 : 0;

    return BranchParameters{l, std::move(P), std::move(Q), R, side};
}

long compute_n0(const ReducedForm& reduced, const PellFundamental& fund) {
    require_z1(reduced);
    require_same_radicand(reduced, fund);
    const Integer abs_lambda = abs(reduced.lambda);
    const Integer abs_shift = abs(reduced.shift_u);
    const Integer abs_e_over_d = abs(reduced.e_over_d);
    const bool lambda_below =
        strict_sign(QuadInt(abs_lambda, -1, reduced.tau)) < 0;

    Integer u = fund.alpha;
    Integer v = fund.beta;
    for (long m = 1; m <= kIterationCap; ++m) {
        const bool v_ok = v > abs_e_over_d;
        const bool u_ok = lambda_below ? u > abs_lambda * v + abs_shift
                                       : u < abs_lambda * v - abs_shift;
        if (u_ok && v_ok) {
            return m;
        }
        Integer u_next = fund.alpha * u + fund.tau * fund.beta * v;
        Integer v_next = fund.beta * u + fund.alpha * v;
        u = std::move(u_next);
        v = std::move(v_next);
    }
    throw InternalError("compute_n0: iteration cap reached");
}

long compute_nl(const ReducedForm& reduced, const PellFundamental& fund,
                int l) {
    require_z1(reduced);
    require_same_radicand(reduced, fund);
    if (l < 1 || l > 4) {
        throw DomainError("compute_nl: branch index must be in 1..4");
    }
    const Integer& tau = reduced.tau;
    const Integer abs_lambda = abs(reduced.lambda);
    if (strict_sign(QuadInt(abs_lambda, -1, tau)) < 0) {
        return 1;
    }
    // |lambda| > sqrt(tau): least m >= 1 with
    // 2 sqrt(tau) (alpha + beta sqrt(tau))^m > 1 + |lambda| - (-1)^l sgn(lambda) sqrt(tau).
    const int surd_coeff = -minus_one_pow(l) * sign_of(reduced.lambda);
    const QuadInt bound(1 + abs_lambda, surd_coeff, tau);
    const QuadInt unit = fund.unit();
    QuadInt lhs = QuadInt(0, 2, tau) * unit;
    for (long m = 1; m <= kIterationCap; ++m) {
        if (strict_sign(lhs - bound) > 0) {
            return m;
        }
        lhs *= unit;
    }
    throw InternalError("compute_nl: iteration cap reached");
}

Thresholds compute_thresholds(const ReducedForm& reduced,
                              const PellFundamental& fund) {
    require_z1(reduced);
    require_same_radicand(reduced, fund);
    Thresholds thr;
    thr.n0 = compute_n0(reduced, fund);
    for (int l = 1; l <= 4; ++l) {
        thr.nl[l - 1] = compute_nl(reduced, fund, l);

        const auto st1 = branch_solution(reduced, fund, l, 1);
        const auto st_n0 = branch_solution(reduced, fund, l, thr.n0);
        const auto st_nl = branch_solution(reduced, fund, l, thr.nl[l - 1]);

        const Integer m_prime =
            std::max({abs(st1.first), abs(st_n0.first), abs(st_nl.first)}) +
            std::max({abs(st1.second), abs(st_n0.second), abs(st_nl.second)});

        // Equivalent two-term form; disagreement means the index selection
        // above is wrong.
        const long n_max = std::max(thr.n0, thr.nl[l - 1]);
        const auto st_max = branch_solution(reduced, fund, l, n_max);
        const Integer m_prime_alt =
            std::max(abs(st1.first), abs(st_max.first)) +
            std::max(abs(st1.second), abs(st_max.second));
        if (m_prime != m_prime_alt) {
            throw InternalError(
                "compute_thresholds: the two forms of M'_l disagree (" +
                m_prime.get_str() + " vs " + m_prime_alt.get_str() +
                ") for branch " + std::to_string(l));
        }
        thr.m_prime[l - 1] = m_prime;
    }
    thr.big_l = *std::max_element(thr.m_prime.begin(), thr.m_prime.end());
    return thr;
}

long count_branch(const ReducedForm& reduced, const PellFundamental& fund,
                  const BranchParameters& params, const Integer& x_floor,
                  const Integer& min_x) {
    require_z1(reduced);
    require_same_radicand(reduced, fund);
    if (x_floor < min_x) {
        throw ThresholdError(x_floor, min_x);
    }
    const Integer K = x_floor - params.R + 1 - params.Q;
    if (K <= 0) {
        throw InternalError("count_branch: nonpositive K above the threshold");
    }
    // max{m >= 0 : P (alpha + beta sqrt(tau))^m <= 2 sqrt(tau) K}. All
    // factors are positive and the unit exceeds 1, so the left side is
    // strictly increasing in m.
    const QuadInt target(0, 2 * K, reduced.tau);
    const QuadInt unit = fund.unit();
    QuadInt lhs = params.P * unit;
    long count = 0;
    while (lhs <= target) {
        ++count;
        lhs *= unit;
    }
    return count;
}

Integer count_solutions(const LA2Equation& eq, const Integer& x_floor) {
    const ReducedForm reduced = reduce(eq);
    require_z1(reduced);
    const PellFundamental fund = fundamental_solution(reduced.tau);
    const Thresholds thr = compute_thresholds(reduced, fund);
    if (x_floor < thr.big_l) {
        throw ThresholdError(x_floor, thr.big_l);
    }
    Integer total = 2;
    for (int l = 1; l <= 4; ++l) {
        const BranchParameters params = branch_parameters(reduced, l);
        total += count_branch(reduced, fund, params, x_floor,
                              thr.m_prime[l - 1]);
    }
    return total;
}

SolutionSet enumerate_solutions(const LA2Equation& eq,
                                const Integer& x_floor) {
    const ReducedForm reduced = reduce(eq);
    require_z1(reduced);
    const PellFundamental fund = fundamental_solution(reduced.tau);
    const Thresholds thr = compute_thresholds(reduced, fund);
    if (x_floor < thr.big_l) {
        throw ThresholdError(x_floor, thr.big_l);
    }

    SolutionSet set;
    auto [plus, minus] = class0_solutions(reduced);
    set.class0[0] = std::move(plus);
    set.class0[1] = std::move(minus);

    for (int l = 1; l <= 4; ++l) {
        const BranchParameters params = branch_parameters(reduced, l);
        const long count = count_branch(reduced, fund, params, x_floor,
                                        thr.m_prime[l - 1]);
        auto& branch = set.branches[l - 1];
        branch.reserve(static_cast<std::size_t>(count));
        for (long m = 1; m <= count; ++m) {
            auto [s, t] = branch_solution(reduced, fund, l, m);
            branch.push_back(BranchPoint{m, std::move(s), std::move(t)});
        }
    }

    for (const auto& point : set.sorted()) {
        if (evaluate(eq, point.first, point.second) != 0) {
            throw InternalError("enumerate_solutions: generated point does "
                                "not solve the equation");
        }
        if (abs_sum(point) > x_floor) {
            throw InternalError(
                "enumerate_solutions: generated point escapes the region");
        }
    }
    return set;
}

}  // namespace la2
