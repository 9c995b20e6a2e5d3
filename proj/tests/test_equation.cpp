#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "la2/equation.hpp"
#include "la2/oracle.hpp"

using namespace la2;
using la2::testing::e1;
using la2::testing::e2;
using la2::testing::pell_eq;

namespace {

bool failed_contains(const ClassificationReport& report, ClassCondition c) {
    return std::find(report.failed.begin(), report.failed.end(), c) !=
           report.failed.end();
}

}  // namespace

TEST_CASE("construction") {
    CHECK_THROWS_AS(LA2Equation(0, 0, -2, -6, 8, 0), DomainError);
    CHECK_THROWS_AS(LA2Equation(-1, 0, -2, -6, 8, 0), DomainError);
}

TEST_CASE("derived quantities") {
    auto q = derive(e1());
    CHECK(q.D == 8);
    CHECK(q.E == -16);
    CHECK(q.F == 36);
    CHECK(q.N == -32);
    CHECK(q.lambda == Integer(0));
    CHECK(q.tau == Integer(2));
    CHECK(q.e_over_d == Integer(-2));
    CHECK(q.half_d == Integer(-3));
    CHECK(q.j == Integer(1));

    auto q2 = derive(e2());
    CHECK(q2.D == 12);
    CHECK(q2.E == 12);
    CHECK(q2.F == 16);
    CHECK(q2.N == -48);
    CHECK(q2.lambda == Integer(1));
    CHECK(q2.tau == Integer(3));
    CHECK(q2.e_over_d == Integer(1));
    CHECK(q2.half_d == Integer(0));
    CHECK(q2.j == Integer(1));

    // The t = 1 instance of the x-coefficient -(4t-2) literature example:
    // the derived class is Z(-7), not Z(1).
    auto q3 = derive(LA2Equation(1, 0, -2, -2, 8, 0));
    CHECK(q3.D == 8);
    CHECK(q3.E == -16);
    CHECK(q3.F == 4);
    CHECK(q3.N == 224);
    CHECK(q3.j == Integer(-7));

    // Odd b: lambda absent.
    auto q4 = derive(LA2Equation(1, 1, -2, -6, 8, 0));
    CHECK(!q4.lambda.has_value());
}

TEST_CASE("classification") {
    auto r1 = classify(e1());
    CHECK(r1.la2);
    CHECK(r1.failed.empty());
    CHECK(r1.j == Integer(1));

    auto r2 = classify(LA2Equation(1, 1, -2, -6, 8, 0));
    CHECK(!r2.la2);
    CHECK(failed_contains(r2, ClassCondition::HalfDivisibility));
    CHECK(!r2.j.has_value());

    // u^2 - v^2 = 1: square discriminant.
    auto r3 = classify(LA2Equation(1, 0, -1, 0, 0, -1));
    CHECK(!r3.la2);
    CHECK(failed_contains(r3, ClassCondition::DNonsquare));

    // gcd 2: rejected, with the normalized equation reported.
    auto r4 = classify(LA2Equation(2, 0, -4, -12, 16, 0));
    CHECK(!r4.la2);
    CHECK(failed_contains(r4, ClassCondition::GcdOne));
    CHECK(r4.coefficient_gcd == 2);
    REQUIRE(r4.normalized.has_value());
    CHECK(*r4.normalized == e1());

    auto r5 = classify(LA2Equation(2, 0, -2, -6, 8, 0));
    CHECK(!r5.la2);
    CHECK(failed_contains(r5, ClassCondition::GcdOne));
    CHECK(failed_contains(r5, ClassCondition::HalfDivisibility));
}

TEST_CASE("all violated conditions are reported") {
    // D = 9 is square, 9 does not divide E, b is odd, 36 does not divide N.
    auto r = classify(LA2Equation(1, 1, -2, -6, 8, 0));
    CHECK(failed_contains(r, ClassCondition::DNonsquare));
    CHECK(failed_contains(r, ClassCondition::DDividesE));
    CHECK(failed_contains(r, ClassCondition::HalfDivisibility));
    CHECK(failed_contains(r, ClassCondition::NDivisibility));
}

TEST_CASE("reduction") {
    auto r1 = reduce(e1());
    CHECK(r1.tau == 2);
    CHECK(r1.j == 1);
    CHECK(r1.forward(0, 0) == std::pair<Integer, Integer>{-3, -2});
    CHECK(r1.inverse(0, 0) == std::pair<Integer, Integer>{3, 2});

    auto r2 = reduce(e2());
    CHECK(r2.tau == 3);
    CHECK(r2.j == 1);
    // (u, v) -> (u + v, v + 1)
    CHECK(r2.forward(2, 5) == std::pair<Integer, Integer>{7, 6});

    // Reduction succeeds for j != 1; downstream solving refuses it.
    auto r3 = reduce(LA2Equation(1, 0, -2, -2, 8, 0));
    CHECK(r3.tau == 2);
    CHECK(r3.j == -7);

    CHECK_THROWS_AS(reduce(LA2Equation(1, 1, -2, -6, 8, 0)),
                    ClassificationError);
    try {
        reduce(LA2Equation(2, 0, -4, -12, 16, 0));
        CHECK(false);
    } catch (const ClassificationError& err) {
        CHECK(err.report.coefficient_gcd == 2);
    }
}

TEST_CASE("forward and inverse maps are mutually inverse") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (const auto& eq : {e1(), e2(), pell_eq()}) {
        auto r = reduce(eq);
        for (int i = 0; i < 200; ++i) {
            const Integer u = dist(rng), v = dist(rng);
            auto [ut, vt] = r.forward(u, v);
            CHECK(r.inverse(ut, vt) == std::pair<Integer, Integer>{u, v});
            auto [uu, vv] = r.inverse(u, v);
            CHECK(r.forward(uu, vv) == std::pair<Integer, Integer>{u, v});
        }
    }
}

TEST_CASE("the forward map transports solutions to the Pell form") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (const auto& eq : {e1(), e2()}) {
        auto r = reduce(eq);
        for (int i = 0; i < 400; ++i) {
            const Integer u = dist(rng), v = dist(rng);
            auto [ut, vt] = r.forward(u, v);
            CHECK((evaluate(eq, u, v) == 0) ==
                  (ut * ut - r.tau * vt * vt == r.j));
        }
    }
}

TEST_CASE("evaluation") {
    CHECK(evaluate(e1(), 0, 0) == 0);
    CHECK(evaluate(e1(), 4, 2) == 0);
    CHECK(evaluate(e2(), 12, -5) == 0);
    CHECK(evaluate(e1(), 1, 1) != 0);
}

TEST_CASE("branch solutions") {
    auto fund2 = fundamental_solution(2);
    auto fund3 = fundamental_solution(3);

    CHECK(branch_solution(reduce(e1()), fund2, 1, 2) ==
          std::pair<Integer, Integer>{20, 14});
    CHECK(branch_solution(reduce(e2()), fund3, 4, 2) ==
          std::pair<Integer, Integer>{12, -5});
    CHECK(branch_solution(reduce(e1()), fund2, 3, 1) ==
          std::pair<Integer, Integer>{0, 0});

    CHECK_THROWS_AS(
        branch_solution(reduce(LA2Equation(1, 0, -2, -2, 8, 0)), fund2, 1, 1),
        UnsupportedClassError);
    CHECK_THROWS_AS(branch_solution(reduce(e1()), fund2, 5, 1), DomainError);
}

TEST_CASE("class-0 solutions") {
    auto c1 = class0_solutions(reduce(e1()));
    CHECK(c1.first == std::pair<Integer, Integer>{4, 2});
    CHECK(c1.second == std::pair<Integer, Integer>{2, 2});

    auto c2 = class0_solutions(reduce(e2()));
    CHECK(c2.first == std::pair<Integer, Integer>{2, -1});
    CHECK(c2.second == std::pair<Integer, Integer>{0, -1});

    auto c3 = class0_solutions(reduce(pell_eq()));
    CHECK(c3.first == std::pair<Integer, Integer>{1, 0});
    CHECK(c3.second == std::pair<Integer, Integer>{-1, 0});
}

TEST_CASE("z1 construction") {
    CHECK(make_z1_equation(0, 2, -2, -3) == e1());
    CHECK(make_z1_equation(1, 3, 1, 0) == e2());
    CHECK(make_z1_equation(0, 2, 0, 0) == pell_eq());
    CHECK_THROWS_AS(make_z1_equation(0, 4, 0, 0), DomainError);
    CHECK_THROWS_AS(make_z1_equation(0, 1, 0, 0), DomainError);
}

TEST_CASE("every constructed equation classifies as Z(1)") {
    for (long tau : {2, 3, 5, 6, 7, 8, 10, 11, 12, 13}) {
        for (long lambda = -6; lambda <= 6; ++lambda) {
            for (long p = -3; p <= 3; ++p) {
                for (long q = -3; q <= 3; ++q) {
                    auto eq = make_z1_equation(lambda, tau, p, q);
                    auto report = classify(eq);
                    CHECK(report.la2);
                    CHECK(report.j == Integer(1));
                    CHECK(eq.a == 1);
                }
            }
        }
    }
}

TEST_CASE("solution transport for all branches and small orders") {
    for (const auto& eq : {e1(), e2(), pell_eq(),
                           make_z1_equation(-3, 7, 2, -1),
                           make_z1_equation(4, 5, -2, 2)}) {
        auto r = reduce(eq);
        auto fund = fundamental_solution(r.tau);
        auto [c_plus, c_minus] = class0_solutions(r);
        CHECK(evaluate(eq, c_plus.first, c_plus.second) == 0);
        CHECK(evaluate(eq, c_minus.first, c_minus.second) == 0);
        for (int l = 1; l <= 4; ++l) {
            for (long m = 1; m <= 10; ++m) {
                auto [s, t] = branch_solution(r, fund, l, m);
                CHECK(evaluate(eq, s, t) == 0);
            }
        }
    }
}

TEST_CASE("the five solution families are disjoint up to m = 10") {
    for (const auto& eq : {e1(), e2(), make_z1_equation(2, 3, 1, -2)}) {
        auto r = reduce(eq);
        auto fund = fundamental_solution(r.tau);
        std::set<std::pair<Integer, Integer>> seen;
        auto [c_plus, c_minus] = class0_solutions(r);
        CHECK(seen.insert(c_plus).second);
        CHECK(seen.insert(c_minus).second);
        for (int l = 1; l <= 4; ++l) {
            for (long m = 1; m <= 10; ++m) {
                CHECK(seen.insert(branch_solution(r, fund, l, m)).second);
            }
        }
    }
}

TEST_CASE("generated families are complete on a small box") {
    // Everything the oracle finds inside |u| + |v| <= 60 must be a class-0
    // point or a branch point of small order.
    for (const auto& eq : {e1(), e2(), pell_eq(),
                           make_z1_equation(1, 5, -1, 1)}) {
        auto r = reduce(eq);
        auto fund = fundamental_solution(r.tau);
        std::set<std::pair<Integer, Integer>> generated;
        auto [c_plus, c_minus] = class0_solutions(r);
        generated.insert(c_plus);
        generated.insert(c_minus);
        for (int l = 1; l <= 4; ++l) {
            for (long m = 1; m <= 12; ++m) {
                generated.insert(branch_solution(r, fund, l, m));
            }
        }
        std::set<std::pair<Integer, Integer>> expected;
        for (const auto& point : generated) {
            if (abs(point.first) + abs(point.second) <= 60) {
                expected.insert(point);
            }
        }
        auto oracle = brute_force_solutions(eq, 60);
        std::set<std::pair<Integer, Integer>> found(oracle.solutions.begin(),
                                                    oracle.solutions.end());
        CHECK(found == expected);
    }
}
