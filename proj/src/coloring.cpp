#include "timmp/coloring.hpp"

#include "timmp/enumeration.hpp"
#include "timmp/errors.hpp"
#include "timmp/lp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace timmp {

namespace {

std::vector<int> topo_order(const Digraph& d, VertexMask mask) {
    const auto res = acyclic_order(d, mask);
    if (!std::holds_alternative<TopologicalOrder>(res)) {
        throw InternalError("coloring produced a cyclic set");
    }
    return std::get<TopologicalOrder>(res).order;
}

// Sorts (set, weight) pairs canonically and fills in decoding orders.
ColoringSolution make_solution(const Digraph& d, std::vector<std::pair<VertexMask, Rational>> entries,
                               Rational value) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return mask_vertices(a.first) < mask_vertices(b.first);
    });
    ColoringSolution sol;
    sol.n = d.size();
    sol.value = std::move(value);
    for (auto& [mask, w] : entries) {
        sol.sets.push_back(mask_vertices(mask));
        sol.weights.push_back(w);
        sol.orders.push_back(topo_order(d, mask));
    }
    return sol;
}

void guard(const Digraph& d, int limit, const char* op) {
    require_size(d.size() <= limit, op, "n <= " + std::to_string(limit));
}

}  // namespace

FractionalResult fractional_dichromatic(const Digraph& d) {
    guard(d, kEnumerationMaxVertices, "fractional_dichromatic");
    const int n = d.size();
    if (n == 0) {
        return {Rational(0), make_solution(d, {}, Rational(0))};
    }
    const auto sets = maximal_acyclic_sets(d).masks();
    LinearProgram lp;
    lp.num_vars = static_cast<int>(sets.size());
    lp.objective.assign(sets.size(), Rational(1));
    for (int v = 1; v <= n; ++v) {
        LinearConstraint row;
        row.coeffs.assign(sets.size(), Rational(0));
        for (std::size_t a = 0; a < sets.size(); ++a) {
            if (sets[a] & bit(v)) {
                row.coeffs[a] = Rational(1);
            }
        }
        row.sense = Sense::ge;
        row.rhs = Rational(1);
        lp.constraints.push_back(std::move(row));
    }
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal) {
        throw InternalError("fractional coloring LP not optimal");
    }
    std::vector<std::pair<VertexMask, Rational>> entries;
    for (std::size_t a = 0; a < sets.size(); ++a) {
        if (!res.x[a].is_zero()) {
            entries.emplace_back(sets[a], res.x[a]);
        }
    }
    return {res.value, make_solution(d, std::move(entries), res.value)};
}

DichromaticResult dichromatic_number(const Digraph& d) {
    guard(d, kEnumerationMaxVertices, "dichromatic_number");
    const int n = d.size();
    if (n == 0) {
        return {0, make_solution(d, {}, Rational(0))};
    }
    const int lower = std::max<std::int64_t>(1, fractional_dichromatic(d).value.ceil_i64());
    std::vector<VertexMask> classes;
    std::function<bool(int, int)> assign = [&](int v, int k) {
        if (v > n) {
            return true;
        }
        const int used = static_cast<int>(classes.size());
        for (int c = 0; c < used; ++c) {
            if (d.is_acyclic(classes[c] | bit(v))) {
                classes[c] |= bit(v);
                if (assign(v + 1, k)) {
                    return true;
                }
                classes[c] &= ~bit(v);
            }
        }
        if (used < k) {
            classes.push_back(bit(v));
            if (assign(v + 1, k)) {
                return true;
            }
            classes.pop_back();
        }
        return false;
    };
    for (int k = lower; k <= n; ++k) {
        classes.clear();
        if (assign(1, k)) {
            std::vector<std::pair<VertexMask, Rational>> entries;
            for (VertexMask c : classes) {
                entries.emplace_back(c, Rational(1));
            }
            return {k, make_solution(d, std::move(entries), Rational(k))};
        }
    }
    throw InternalError("dichromatic search exhausted without a coloring");
}

FractionalResult local_fractional_dichromatic(const Digraph& d) {
    guard(d, kLocalMaxVertices, "local_fractional_dichromatic");
    const int n = d.size();
    if (n == 0) {
        return {Rational(0), make_solution(d, {}, Rational(0))};
    }
    const auto sets = all_acyclic_sets(d);
    const std::size_t t_var = sets.size();
    LinearProgram lp;
    lp.num_vars = static_cast<int>(sets.size() + 1);
    lp.objective.assign(sets.size() + 1, Rational(0));
    lp.objective[t_var] = Rational(1);
    for (int v = 1; v <= n; ++v) {
        LinearConstraint cover;
        cover.coeffs.assign(sets.size() + 1, Rational(0));
        for (std::size_t a = 0; a < sets.size(); ++a) {
            if (sets[a] & bit(v)) {
                cover.coeffs[a] = Rational(1);
            }
        }
        cover.sense = Sense::ge;
        cover.rhs = Rational(1);
        lp.constraints.push_back(std::move(cover));
    }
    for (int v = 1; v <= n; ++v) {
        const VertexMask closed_in = d.in_mask(v) | bit(v);
        LinearConstraint local;
        local.coeffs.assign(sets.size() + 1, Rational(0));
        for (std::size_t a = 0; a < sets.size(); ++a) {
            if (sets[a] & closed_in) {
                local.coeffs[a] = Rational(1);
            }
        }
        local.coeffs[t_var] = Rational(-1);
        local.sense = Sense::le;
        local.rhs = Rational(0);
        lp.constraints.push_back(std::move(local));
    }
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal) {
        throw InternalError("local coloring LP not optimal");
    }
    std::vector<std::pair<VertexMask, Rational>> entries;
    for (std::size_t a = 0; a < sets.size(); ++a) {
        if (!res.x[a].is_zero()) {
            entries.emplace_back(sets[a], res.x[a]);
        }
    }
    return {res.value, make_solution(d, std::move(entries), res.value)};
}

Schedule extract_schedule(const ColoringSolution& sol) {
    Schedule s;
    s.n = sol.n;
    s.slot_counts.assign(sol.n, 0);
    const std::int64_t scale = lcm_of_denominators(sol.weights);
    for (std::size_t a = 0; a < sol.sets.size(); ++a) {
        const Rational slots = sol.weights[a] * Rational(static_cast<long>(scale));
        if (!slots.is_integer() || slots.sign() < 0) {
            throw ValidationError("coloring weights must be nonnegative rationals");
        }
        for (std::int64_t r = 0; r < slots.numerator_i64(); ++r) {
            Slot slot;
            for (int v : sol.orders[a]) {
                if (v < 1 || v > sol.n) {
                    throw ValidationError("coloring set vertex out of range");
                }
                if (s.slot_counts[v - 1] < scale) {
                    slot.order.push_back(v);
                    ++s.slot_counts[v - 1];
                }
            }
            if (slot.order.empty()) {
                continue;
            }
            slot.set = slot.order;
            std::sort(slot.set.begin(), slot.set.end());
            s.slots.push_back(std::move(slot));
        }
    }
    s.period = static_cast<int>(s.slots.size());
    return s;
}

SimulationResult simulate_schedule(const Digraph& d, const Schedule& s) {
    SimulationResult res;
    const int n = d.size();
    std::vector<int> decoded(n, 0);
    auto fail = [&](int slot, std::string reason) {
        res.ok = false;
        res.error = SimulationError{slot, std::move(reason)};
        res.rates.assign(n, Rational(0));
        return res;
    };
    for (std::size_t i = 0; i < s.slots.size(); ++i) {
        const Slot& slot = s.slots[i];
        const int idx = static_cast<int>(i) + 1;
        VertexMask set = 0;
        for (int v : slot.set) {
            if (v < 1 || v > n) {
                return fail(idx, "vertex " + std::to_string(v) + " out of range");
            }
            set |= bit(v);
        }
        if (popcount(set) != static_cast<int>(slot.set.size())) {
            return fail(idx, "duplicate vertex in set");
        }
        if (!d.is_acyclic(set)) {
            return fail(idx, "set is not acyclic");
        }
        std::vector<int> sorted = slot.order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != mask_vertices(set)) {
            return fail(idx, "order is not a permutation of the set");
        }
        VertexMask passed = 0;
        for (int v : slot.order) {
            if ((d.in_mask(v) & set & ~passed) != 0) {
                return fail(idx, "order is not topological at vertex " + std::to_string(v));
            }
            passed |= bit(v);
        }
        for (int v : slot.order) {
            ++decoded[v - 1];
        }
    }
    if (s.period <= 0) {
        return fail(0, "empty schedule");
    }
    if (s.period != static_cast<int>(s.slots.size())) {
        return fail(0, "period does not match slot count");
    }
    res.ok = true;
    for (int v = 1; v <= n; ++v) {
        res.rates.emplace_back(static_cast<long>(decoded[v - 1]), static_cast<long>(s.period));
    }
    return res;
}

}  // namespace timmp
