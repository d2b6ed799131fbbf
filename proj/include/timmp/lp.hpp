#pragma once

#include "timmp/rational.hpp"

#include <string>
#include <vector>

namespace timmp {

enum class Sense { le, ge, eq };

std::string to_string(Sense s);

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Sense sense = Sense::le;
    Rational rhs;
};

/// Optimize objective·x subject to the constraints and x >= 0.
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> objective;
    bool maximize = false;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    std::vector<Rational> x;
    /// One multiplier per constraint; for an optimal solution value = duals·rhs.
    std::vector<Rational> duals;
};

/// Exact two-phase primal simplex with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace timmp
