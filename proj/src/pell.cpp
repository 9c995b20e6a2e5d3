#include "la2/pell.hpp"

#include <map>
#include <mutex>

#include "la2/errors.hpp"

namespace la2 {

namespace {

void check_radicand(const Integer& tau) {
    if (tau < 2 || is_perfect_square(tau)) {
        throw DomainError("Pell: tau must be a nonsquare integer >= 2, got " +
                          tau.get_str());
    }
}

}  // namespace

CFExpansion cf_expand_sqrt(const Integer& tau, std::size_t max_period) {
    check_radicand(tau);
    CFExpansion cf;
    cf.a0 = isqrt(tau);
    const Integer two_a0 = 2 * cf.a0;

    Integer m = 0;
    Integer d = 1;
    Integer a = cf.a0;
    while (true) {
        m = d * a - m;
        d = exact_div(tau - m * m, d);
        a = floor_div(cf.a0 + m, d);
        cf.period.push_back(a);
        if (a == two_a0) {
            return cf;
        }
        if (cf.period.size() >= max_period) {
            throw CapExceededError(
                "cf_expand_sqrt: period of sqrt(" + tau.get_str() +
                ") exceeds cap " + std::to_string(max_period));
        }
    }
}

PellFundamental fundamental_solution(const Integer& tau) {
    static std::map<Integer, PellFundamental> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(tau);
        if (it != cache.end()) {
            return it->second;
        }
    }

    const CFExpansion cf = cf_expand_sqrt(tau);
    const std::size_t r = cf.period.size();
    // Convergent index r-1 solves p^2 - tau q^2 = 1 when the period length
    // is even; for odd length the first solution sits one full period
    // later, at index 2r-1 (a0 itself is index 0).
    const std::size_t last = (r % 2 == 0) ? r - 1 : 2 * r - 1;

    Integer p_prev = 1, p = cf.a0;
    Integer q_prev = 0, q = 1;
    for (std::size_t k = 1; k <= last; ++k) {
        const Integer& ak = cf.period[(k - 1) % r];
        Integer p_next = ak * p + p_prev;
        Integer q_next = ak * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }

    PellFundamental fund{tau, p, q};
    if (fund.alpha * fund.alpha - tau * fund.beta * fund.beta != 1) {
        throw InternalError("fundamental_solution: convergent (" +
                            fund.alpha.get_str() + ", " + fund.beta.get_str() +
                            ") does not satisfy the Pell identity for tau = " +
                            tau.get_str());
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(tau, std::move(fund)).first->second;
}

std::pair<Integer, Integer> pell_sequence(const PellFundamental& fund, long m) {
    if (m < 1) {
        throw DomainError("pell_sequence: m must be >= 1");
    }
    Integer u = fund.alpha;
    Integer v = fund.beta;
    for (long k = 1; k < m; ++k) {
        Integer u_next = fund.alpha * u + fund.tau * fund.beta * v;
        Integer v_next = fund.beta * u + fund.alpha * v;
        u = std::move(u_next);
        v = std::move(v_next);
    }
    return {u, v};
}

PellPoint pell_class_point(const PellFundamental& fund, int l, long m) {
    if (l < 1 || l > 4) {
        throw DomainError("pell_class_point: class index must be in 1..4");
    }
    auto [u, v] = pell_sequence(fund, m);
    return PellPoint{u_sign(l) * u, v_sign(l) * v, l, m};
}

PellPoint pell_class0_point(const PellFundamental&, Class0Point which) {
    return PellPoint{which == Class0Point::Plus ? 1 : -1, 0, 0, 1};
}

}  // namespace la2
