#include "la2/equation.hpp"

#include <sstream>

namespace la2 {

std::string condition_name(ClassCondition c) {
    switch (c) {
        case ClassCondition::APositive:
            return "a>0";
        case ClassCondition::GcdOne:
            return "gcd=1";
        case ClassCondition::DNonsquare:
            return "i";
        case ClassCondition::DDividesE:
            return "ii";
        case ClassCondition::HalfDivisibility:
            return "iii";
        case ClassCondition::NDivisibility:
            return "iv";
    }
    return "?";
}

namespace {

std::string describe_failures(const ClassificationReport& report) {
    std::ostringstream os;
    os << "not an LA2-type equation; failed conditions:";
    for (ClassCondition c : report.failed) {
        os << " " << condition_name(c);
    }
    if (report.coefficient_gcd != 1) {
        os << " (coefficient gcd = " << report.coefficient_gcd.get_str() << ")";
    }
    return os.str();
}

}  // namespace

ClassificationError::ClassificationError(ClassificationReport report_)
    : std::runtime_error(describe_failures(report_)),
      report(std::move(report_)) {}

DerivedQuantities derive(const LA2Equation& eq) {
    DerivedQuantities q;
    q.D = eq.b * eq.b - 4 * eq.a * eq.c;
    q.E = eq.b * eq.d - 2 * eq.a * eq.e;
    q.F = eq.d * eq.d - 4 * eq.a * eq.f;
    q.N = q.E * q.E - q.D * q.F;

    if (divides(2, eq.b)) {
        q.lambda = exact_div(eq.b, 2);
    }
    if (divides(4, q.D)) {
        q.tau = exact_div(q.D, 4);
    }
    if (q.D != 0 && divides(q.D, q.E)) {
        q.e_over_d = exact_div(q.E, q.D);
    }
    if (divides(2, eq.d)) {
        q.half_d = exact_div(eq.d, 2);
    }
    const Integer denom = -4 * eq.a * eq.a * q.D;
    if (denom != 0 && divides(denom, q.N)) {
        q.j = exact_div(q.N, denom);
    }
    return q;
}

ClassificationReport classify(const LA2Equation& eq) {
    ClassificationReport report;
    report.derived = derive(eq);

    if (eq.a <= 0) {
        report.failed.push_back(ClassCondition::APositive);
    }

    Integer g = gcd(gcd(gcd(eq.a, eq.b), gcd(eq.c, eq.d)), gcd(eq.e, eq.f));
    report.coefficient_gcd = g;
    if (g != 1) {
        report.failed.push_back(ClassCondition::GcdOne);
        report.normalized =
            LA2Equation(exact_div(eq.a, g), exact_div(eq.b, g),
                        exact_div(eq.c, g), exact_div(eq.d, g),
                        exact_div(eq.e, g), exact_div(eq.f, g));
    }

    const Integer& D = report.derived.D;
    if (D <= 0 || is_perfect_square(D)) {
        report.failed.push_back(ClassCondition::DNonsquare);
    }
    if (D == 0 || !divides(D, report.derived.E)) {
        report.failed.push_back(ClassCondition::DDividesE);
    }
    if (!divides(2 * eq.a, eq.b) || !divides(eq.a, eq.c) ||
        !divides(2 * eq.a, eq.d)) {
        report.failed.push_back(ClassCondition::HalfDivisibility);
    }
    const Integer four_a2_d = 4 * eq.a * eq.a * D;
    if (four_a2_d == 0 || !divides(four_a2_d, report.derived.N)) {
        report.failed.push_back(ClassCondition::NDivisibility);
    }

    report.la2 = report.failed.empty();
    if (report.la2) {
        report.j = exact_div(report.derived.N, -four_a2_d);
        // Conditions (i)-(iv) with gcd 1 force a = 1: a divides b, c, d and
        // then e and f, so the gcd would otherwise be a > 1.
        if (eq.a != 1) {
            throw InternalError(
                "classify: equation passed all conditions with a != 1");
        }
    }
    return report;
}

ReducedForm reduce(const LA2Equation& eq) {
    ClassificationReport report = classify(eq);
    if (!report.la2) {
        throw ClassificationError(std::move(report));
    }
    const DerivedQuantities& q = report.derived;
    ReducedForm r;
    r.tau = *q.tau;
    r.j = *report.j;
    r.lambda = *q.lambda;
    r.e_over_d = *q.e_over_d;
    r.half_d = *q.half_d;
    r.shift_u = r.e_over_d * r.lambda - r.half_d;
    r.shift_v = -r.e_over_d;
    return r;
}

Integer evaluate(const LA2Equation& eq, const Integer& u, const Integer& v) {
    return eq.a * u * u + eq.b * u * v + eq.c * v * v + eq.d * u + eq.e * v +
           eq.f;
}

std::pair<Integer, Integer> branch_solution(const ReducedForm& reduced,
                                            const PellFundamental& fund,
                                            int l, long m) {
    if (reduced.j != 1) {
        throw UnsupportedClassError(reduced.j);
    }
    if (fund.tau != reduced.tau) {
        throw RingMismatchError("branch_solution: fundamental solution is for "
                                "tau = " + fund.tau.get_str() +
                                ", equation reduces to tau = " +
                                reduced.tau.get_str());
    }
    if (l < 1 || l > 4) {
        throw DomainError("branch_solution: branch index must be in 1..4");
    }
    auto [u, v] = pell_sequence(fund, m);
    Integer s = u_sign(l) * u - v_sign(l) * reduced.lambda * v + reduced.shift_u;
    Integer t = v_sign(l) * v + reduced.shift_v;
    return {std::move(s), std::move(t)};
}

std::pair<std::pair<Integer, Integer>, std::pair<Integer, Integer>>
class0_solutions(const ReducedForm& reduced) {
    if (reduced.j != 1) {
        throw UnsupportedClassError(reduced.j);
    }
    return {reduced.inverse(1, 0), reduced.inverse(-1, 0)};
}

LA2Equation make_z1_equation(const Integer& lambda, const Integer& tau,
                             const Integer& p, const Integer& q) {
    if (tau < 2 || is_perfect_square(tau)) {
        throw DomainError("make_z1_equation: tau must be a nonsquare integer >= 2");
    }
    return LA2Equation(1, 2 * lambda, lambda * lambda - tau, 2 * q,
                       2 * lambda * q - 2 * tau * p, q * q - tau * p * p - 1);
}

}  // namespace la2
