#include "timmp/lp.hpp"

#include "timmp/errors.hpp"

namespace timmp {

std::string to_string(Sense s) {
    switch (s) {
        case Sense::le:
            return "<=";
        case Sense::ge:
            return ">=";
        case Sense::eq:
            return "=";
    }
    return "?";
}

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1)) {}

    mpq_class& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
    mpq_class& rhs(std::size_t r) { return at(r, cols_); }
    mpq_class& cost(std::size_t c) { return at(rows_, c); }
    mpq_class& cost_rhs() { return at(rows_, cols_); }

    void pivot(std::size_t pr, std::size_t pc) {
        const mpq_class p = at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c) {
            at(pr, c) /= p;
        }
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == pr) {
                continue;
            }
            const mpq_class f = at(r, pc);
            if (sgn(f) == 0) {
                continue;
            }
            for (std::size_t c = 0; c <= cols_; ++c) {
                if (sgn(at(pr, c)) != 0) {
                    at(r, c) -= f * at(pr, c);
                }
            }
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpq_class> t_;
};

enum class Outcome { optimal, unbounded };

// Minimizes the cost row with Bland's rule over columns not marked barred.
Outcome run_simplex(Tableau& t, std::vector<std::size_t>& basis, const std::vector<bool>& barred) {
    while (true) {
        std::size_t enter = t.cols();
        for (std::size_t c = 0; c < t.cols(); ++c) {
            if (!barred[c] && sgn(t.cost(c)) < 0) {
                enter = c;
                break;
            }
        }
        if (enter == t.cols()) {
            return Outcome::optimal;
        }
        std::size_t leave = t.rows();
        mpq_class best_ratio;
        for (std::size_t r = 0; r < t.rows(); ++r) {
            if (sgn(t.at(r, enter)) <= 0) {
                continue;
            }
            mpq_class ratio = t.rhs(r) / t.at(r, enter);
            if (leave == t.rows() || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == t.rows()) {
            return Outcome::unbounded;
        }
        t.pivot(leave, enter);
        basis[leave] = enter;
    }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.constraints.size();
    if (lp.objective.size() != n) {
        throw InternalError("LP objective length does not match variable count");
    }

    // Normalize rows to nonnegative right-hand sides.
    std::vector<bool> negated(m, false);
    std::vector<Sense> sense(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.constraints[i];
        if (row.coeffs.size() != n) {
            throw InternalError("LP constraint length does not match variable count");
        }
        sense[i] = row.sense;
        if (row.rhs.sign() < 0) {
            negated[i] = true;
            if (sense[i] == Sense::le) {
                sense[i] = Sense::ge;
            } else if (sense[i] == Sense::ge) {
                sense[i] = Sense::le;
            }
        }
    }

    // Column layout: originals, then one slack/surplus per inequality, then artificials.
    std::vector<std::size_t> slack_col(m, 0);
    std::vector<std::size_t> art_col(m, 0);
    std::size_t next = n;
    for (std::size_t i = 0; i < m; ++i) {
        if (sense[i] != Sense::eq) {
            slack_col[i] = next++;
        }
    }
    const std::size_t first_art = next;
    for (std::size_t i = 0; i < m; ++i) {
        if (sense[i] != Sense::le) {
            art_col[i] = next++;
        }
    }
    const std::size_t cols = next;

    Tableau t(m, cols);
    std::vector<std::size_t> basis(m);
    std::vector<std::size_t> identity_col(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.constraints[i];
        const int s = negated[i] ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            t.at(i, j) = row.coeffs[j].raw() * s;
        }
        t.rhs(i) = row.rhs.raw() * s;
        if (sense[i] == Sense::le) {
            t.at(i, slack_col[i]) = 1;
            basis[i] = slack_col[i];
        } else {
            if (sense[i] == Sense::ge) {
                t.at(i, slack_col[i]) = -1;
            }
            t.at(i, art_col[i]) = 1;
            basis[i] = art_col[i];
        }
        identity_col[i] = basis[i];
    }

    std::vector<bool> barred(cols, false);
    LpResult result;

    // Phase 1: minimize the sum of artificials.
    if (first_art < cols) {
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] >= first_art) {
                for (std::size_t c = 0; c <= cols; ++c) {
                    if (c < first_art || c == cols) {
                        t.at(m, c) -= t.at(i, c);
                    }
                }
            }
        }
        run_simplex(t, basis, barred);
        if (sgn(t.cost_rhs()) != 0) {
            result.status = LpStatus::infeasible;
            return result;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < first_art) {
                continue;
            }
            for (std::size_t c = 0; c < first_art; ++c) {
                if (sgn(t.at(i, c)) != 0) {
                    t.pivot(i, c);
                    basis[i] = c;
                    break;
                }
            }
        }
        for (std::size_t c = first_art; c < cols; ++c) {
            barred[c] = true;
        }
    }

    // Phase 2: minimize c·x (negated for maximization).
    std::vector<mpq_class> cost(cols, 0);
    for (std::size_t j = 0; j < n; ++j) {
        cost[j] = lp.maximize ? mpq_class(-lp.objective[j].raw()) : lp.objective[j].raw();
    }
    for (std::size_t c = 0; c <= cols; ++c) {
        t.at(m, c) = c < cols ? cost[c] : mpq_class(0);
    }
    for (std::size_t i = 0; i < m; ++i) {
        const mpq_class cb = cost[basis[i]];
        if (sgn(cb) == 0) {
            continue;
        }
        for (std::size_t c = 0; c <= cols; ++c) {
            t.at(m, c) -= cb * t.at(i, c);
        }
    }
    if (run_simplex(t, basis, barred) == Outcome::unbounded) {
        result.status = LpStatus::unbounded;
        return result;
    }

    result.status = LpStatus::optimal;
    std::vector<mpq_class> x(cols, 0);
    for (std::size_t i = 0; i < m; ++i) {
        x[basis[i]] = t.rhs(i);
    }
    result.x.reserve(n);
    mpq_class value = 0;
    for (std::size_t j = 0; j < n; ++j) {
        result.x.emplace_back(x[j]);
        value += lp.objective[j].raw() * x[j];
    }
    result.value = Rational(value);
    result.duals.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        mpq_class y = -t.cost(identity_col[i]);
        if (negated[i]) {
            y = -y;
        }
        if (lp.maximize) {
            y = -y;
        }
        result.duals.emplace_back(y);
    }
    return result;
}

}  // namespace timmp
