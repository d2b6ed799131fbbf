#include "timmp/lp.hpp"

#include <doctest.h>

#include <random>

using namespace timmp;

namespace {

LinearConstraint row(std::vector<Rational> c, Sense s, Rational rhs) { return {std::move(c), s, rhs}; }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

}  // namespace

TEST_CASE("small maximization") {
    LinearProgram lp{2, {Rational(3), Rational(2)}, true, {}};
    lp.constraints.push_back(row({1, 1}, Sense::le, 4));
    lp.constraints.push_back(row({1, 3}, Sense::le, 6));
    lp.constraints.push_back(row({1, 0}, Sense::le, 3));
    const auto r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == Rational(11));
    CHECK(r.x == std::vector<Rational>{3, 1});
}

TEST_CASE("fractional covering of a triangle") {
    // Cover the vertices of C_3 by edges: optimum 3/2 with weight 1/2 each.
    LinearProgram lp{3, {1, 1, 1}, false, {}};
    lp.constraints.push_back(row({1, 0, 1}, Sense::ge, 1));
    lp.constraints.push_back(row({1, 1, 0}, Sense::ge, 1));
    lp.constraints.push_back(row({0, 1, 1}, Sense::ge, 1));
    const auto r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == Rational(3, 2));
    CHECK(r.duals == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("infeasible and unbounded") {
    LinearProgram bad{1, {1}, false, {row({1}, Sense::ge, 2), row({1}, Sense::le, 1)}};
    CHECK(solve_lp(bad).status == LpStatus::infeasible);
    LinearProgram open{2, {1, 1}, true, {row({1, -1}, Sense::le, 1)}};
    CHECK(solve_lp(open).status == LpStatus::unbounded);
}

TEST_CASE("equality rows and negative right-hand sides") {
    LinearProgram lp{2, {1, 2}, false, {row({1, 1}, Sense::eq, 3), row({-1, 0}, Sense::le, -1)}};
    const auto r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == Rational(3));
    CHECK(r.x == std::vector<Rational>{3, 0});
}

TEST_CASE("strong duality on random bounded programs") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(0, 5);
    for (int k = 0; k < 200; ++k) {
        const int n = 2 + k % 4;
        const int m = 2 + k % 5;
        LinearProgram lp;
        lp.num_vars = n;
        lp.maximize = k % 2 == 0;
        for (int j = 0; j < n; ++j) {
            lp.objective.push_back(Rational(coef(rng) + (lp.maximize ? 0 : 1)));
        }
        for (int i = 0; i < m; ++i) {
            std::vector<Rational> c(n);
            for (auto& x : c) {
                x = Rational(coef(rng) + 1);
            }
            lp.constraints.push_back(row(c, lp.maximize ? Sense::le : Sense::ge, Rational(coef(rng) + 1)));
        }
        const auto r = solve_lp(lp);
        REQUIRE(r.status == LpStatus::optimal);
        CHECK(dot(lp.objective, r.x) == r.value);
        Rational dual_obj;
        for (int i = 0; i < m; ++i) {
            const Rational lhs = dot(lp.constraints[i].coeffs, r.x);
            const bool satisfied = lp.constraints[i].sense == Sense::le ? lhs <= lp.constraints[i].rhs
                                                                        : lhs >= lp.constraints[i].rhs;
            CHECK(satisfied);
            CHECK(r.duals[i] >= Rational(0));
            dual_obj += r.duals[i] * lp.constraints[i].rhs;
        }
        CHECK(dual_obj == r.value);
        for (int j = 0; j < n; ++j) {
            Rational col;
            for (int i = 0; i < m; ++i) {
                col += r.duals[i] * lp.constraints[i].coeffs[j];
            }
            const bool dual_feasible = lp.maximize ? col >= lp.objective[j] : col <= lp.objective[j];
            CHECK(dual_feasible);
        }
    }
}
