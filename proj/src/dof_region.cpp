#include "timmp/dof_region.hpp"

#include "timmp/errors.hpp"
#include "timmp/lp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace timmp {

std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::I:
            return "I";
        case CaseLabel::II:
            return "II";
        case CaseLabel::III:
            return "III";
        case CaseLabel::special:
            return "special";
        case CaseLabel::undecided:
            return "undecided";
    }
    return "undecided";
}

std::string to_string(DofStatus s) {
    switch (s) {
        case DofStatus::optimal:
            return "optimal";
        case DofStatus::linear_optimal:
            return "linear_optimal";
        case DofStatus::gap:
            return "gap";
    }
    return "gap";
}

namespace {

std::vector<Rational> indicator(const std::vector<int>& members, int n) {
    std::vector<Rational> c(n, Rational(0));
    for (int v : members) {
        c[v - 1] = Rational(1);
    }
    return c;
}

std::string set_str(const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(vs[i]);
    }
    return s + "}";
}

}  // namespace

RationalPolytope outer_bound_polytope(const Digraph& d) {
    const int n = d.size();
    RationalPolytope p;
    p.dimension = n;
    p.add_unit_box();
    for (const auto& q : maximal_cliques(d).members) {
        if (q.size() >= 2) {
            p.add(indicator(q, n), Sense::le, Rational(1));
        }
    }
    for (const auto& c : minimal_dicycles(d).members) {
        if (c.size() >= 3) {
            std::vector<int> sorted = c;
            std::sort(sorted.begin(), sorted.end());
            p.add(indicator(sorted, n), Sense::le, Rational(static_cast<long>(c.size()) - 1));
        }
    }
    return p;
}

bool symmetric_part_perfect(const Digraph& d) {
    return is_perfect_matrix(incidence_matrix(maximal_cliques(d), d.size())).result;
}

bool is_perfect_digraph(const Digraph& d) {
    for (const auto& c : minimal_dicycles(d).members) {
        if (c.size() >= 3) {
            return false;
        }
    }
    return symmetric_part_perfect(d);
}

Digraph special_c52_digraph() {
    Digraph d(5);
    for (int i = 1; i <= 5; ++i) {
        const int j = i % 5 + 1;
        d.add_arc(i, j);
        d.add_arc(j, i);
    }
    return d;
}

Digraph special_j3_digraph() {
    // Directed triangle 1->2->3->1 with hub 4 bidirected to all three.
    Digraph d(4, {{1, 2}, {2, 3}, {3, 1}});
    for (int v = 1; v <= 3; ++v) {
        d.add_arc(4, v);
        d.add_arc(v, 4);
    }
    return d;
}

std::string special_instance_name(const Digraph& d) {
    static const std::string c52 = canonical_form(special_c52_digraph()).encoding;
    static const std::string j3 = canonical_form(special_j3_digraph()).encoding;
    if (d.size() != 5 && d.size() != 4) {
        return "";
    }
    const std::string enc = canonical_form(d).encoding;
    if (enc == c52) {
        return "c_5^2";
    }
    if (enc == j3) {
        return "j_3";
    }
    return "";
}

CaseVerdict classify_case(const Digraph& d) {
    CaseVerdict v;
    const int n = d.size();
    const StructureFamily cliques = maximal_cliques(d);
    const StructureFamily cycles = minimal_dicycles(d);

    for (const auto& c : cycles.members) {
        v.has_long_dicycle = v.has_long_dicycle || c.size() >= 3;
    }
    for (const auto& q : cliques.members) {
        v.has_large_clique = v.has_large_clique || q.size() >= 3;
    }
    v.clique_matrix_perfect = is_perfect_matrix(incidence_matrix(cliques, n)).result;
    v.evidence.push_back(std::string("induced dicycle of length >= 3: ") + (v.has_long_dicycle ? "yes" : "no"));
    v.evidence.push_back(std::string("clique-vertex matrix perfect: ") + (v.clique_matrix_perfect ? "yes" : "no"));
    v.evidence.push_back(std::string("clique of size >= 3: ") + (v.has_large_clique ? "yes" : "no"));

    if (!v.has_long_dicycle && v.clique_matrix_perfect) {
        v.label = CaseLabel::I;
        return v;
    }
    if (!v.has_large_clique) {
        v.dicycle_matrix_ideal = is_ideal(incidence_matrix(cycles, n)).result;
        v.evidence.push_back(std::string("dicycle-vertex matrix ideal: ") + (*v.dicycle_matrix_ideal ? "yes" : "no"));
        if (*v.dicycle_matrix_ideal) {
            v.label = CaseLabel::II;
            return v;
        }
    }
    if (v.clique_matrix_perfect) {
        // Drop bidirected pairs absorbed by a large clique; the rest must meet each large clique at most once.
        VertexMask big = 0;
        std::vector<VertexMask> big_cliques;
        for (const auto& q : cliques.members) {
            if (q.size() >= 3) {
                big |= vertices_mask(q);
                big_cliques.push_back(vertices_mask(q));
            }
        }
        for (const auto& c : cycles.members) {
            const VertexMask cm = vertices_mask(c);
            for (VertexMask q : big_cliques) {
                if ((cm & q) != cm && popcount(cm & q) > 1) {
                    v.intersection_condition = false;
                }
            }
        }
        v.evidence.push_back(std::string("|C cap Q| <= 1 for cycles outside large cliques: ") +
                             (v.intersection_condition ? "yes" : "no"));
        // The mixed packing/covering polytope is integral iff S(d) is perfect and the
        // dicycle hypergraph has no MNI minor after deleting any set meeting every triangle.
        std::vector<VertexMask> triangles;
        for (const auto& q : cliques.members) {
            if (q.size() < 3) {
                continue;
            }
            for (std::size_t i = 0; i < q.size(); ++i) {
                for (std::size_t j = i + 1; j < q.size(); ++j) {
                    for (std::size_t k = j + 1; k < q.size(); ++k) {
                        triangles.push_back(bit(q[i]) | bit(q[j]) | bit(q[k]));
                    }
                }
            }
        }
        auto hits_all = [&](VertexMask u) {
            return std::all_of(triangles.begin(), triangles.end(), [&](VertexMask t) { return (t & u) != 0; });
        };
        const auto cycle_masks = cycles.masks();
        const std::vector<int> pool = mask_vertices(big);
        bool all_ideal = true;
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pool.size()) && all_ideal; ++pick) {
            VertexMask u = 0;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if ((pick >> i) & 1U) {
                    u |= bit(pool[i]);
                }
            }
            if (!hits_all(u)) {
                continue;
            }
            bool minimal = true;
            for (int x : mask_vertices(u)) {
                minimal = minimal && !hits_all(u & ~bit(x));
            }
            if (!minimal) {
                continue;
            }
            const std::vector<int> rest = mask_vertices(d.all() & ~u);
            std::vector<std::vector<int>> rows;
            for (VertexMask c : cycle_masks) {
                if ((c & u) != 0) {
                    continue;
                }
                std::vector<int> row;
                for (int x : rest) {
                    row.push_back((c & bit(x)) ? 1 : 0);
                }
                rows.push_back(std::move(row));
            }
            if (rows.empty()) {
                continue;
            }
            const MatrixVerdict iv = is_ideal(BinaryMatrix(rows));
            if (!iv.result) {
                all_ideal = false;
                v.reduced_vertices = rest;
                if (iv.mni && iv.mni->relation == "submatrix") {
                    v.reduced_mni_submatrix = iv.mni;
                } else if (iv.mni) {
                    v.reduced_mni_minor = iv.mni;
                }
                v.evidence.push_back("dicycle matrix after deleting triangle transversal " + set_str(mask_vertices(u)) +
                                     " is not ideal" + (iv.mni ? " (MNI " + iv.mni->name + ")" : std::string()));
            }
        }
        if (all_ideal) {
            v.evidence.push_back("dicycle matrix ideal after deleting every minimal triangle transversal: yes");
        }
        if (all_ideal && v.intersection_condition) {
            v.label = CaseLabel::III;
            return v;
        }
    }
    v.special_name = special_instance_name(d);
    if (!v.special_name.empty()) {
        v.label = CaseLabel::special;
        v.evidence.push_back("isomorphic to the " + v.special_name + " instance");
        return v;
    }
    v.label = CaseLabel::undecided;
    return v;
}

Rational symmetric_outer(const RationalPolytope& p) {
    std::optional<Rational> best;
    for (const auto& c : p.inequalities) {
        if (c.sense == Sense::ge) {
            continue;
        }
        Rational sum(0);
        for (const auto& a : c.coeffs) {
            sum += a;
        }
        if (sum.sign() <= 0) {
            continue;
        }
        const Rational t = c.rhs / sum;
        if (!best || t < *best) {
            best = t;
        }
    }
    if (!best) {
        throw ValidationError("symmetric_outer: polytope is unbounded along the diagonal");
    }
    return *best;
}

std::optional<ConvexCertificate> convex_combination(const Point& target, const std::vector<Point>& points) {
    if (points.empty()) {
        return std::nullopt;
    }
    const std::size_t dim = target.size();
    LinearProgram lp;
    lp.num_vars = static_cast<int>(points.size());
    lp.objective.assign(points.size(), Rational(0));
    LinearConstraint total;
    total.coeffs.assign(points.size(), Rational(1));
    total.sense = Sense::eq;
    total.rhs = Rational(1);
    lp.constraints.push_back(total);
    for (std::size_t k = 0; k < dim; ++k) {
        LinearConstraint row;
        for (const auto& p : points) {
            row.coeffs.push_back(p[k]);
        }
        row.sense = Sense::eq;
        row.rhs = target[k];
        lp.constraints.push_back(std::move(row));
    }
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal) {
        return std::nullopt;
    }
    ConvexCertificate cert;
    cert.target = target;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!res.x[i].is_zero()) {
            cert.points.push_back(points[i]);
            cert.coefficients.push_back(res.x[i]);
        }
    }
    // Independent re-substitution.
    Point sum(dim, Rational(0));
    Rational weight(0);
    bool nonneg = true;
    for (std::size_t i = 0; i < cert.points.size(); ++i) {
        weight += cert.coefficients[i];
        nonneg = nonneg && cert.coefficients[i].sign() >= 0;
        for (std::size_t k = 0; k < dim; ++k) {
            sum[k] += cert.coefficients[i] * cert.points[i][k];
        }
    }
    cert.verified = nonneg && weight == Rational(1) && sum == target;
    return cert;
}

DoFRegion dof_region(const Digraph& d) {
    DoFRegion r;
    const int n = d.size();
    r.polytope = outer_bound_polytope(d);
    r.verdict = classify_case(d);
    r.extreme_points = enumerate_vertices(r.polytope);
    bool all_achievable = true;
    std::vector<Point> achievable_points;
    for (const auto& pt : r.extreme_points) {
        PointWitness w;
        w.point = pt;
        w.integral = is_integral(pt);
        if (w.integral) {
            VertexMask support = 0;
            for (int k = 0; k < n; ++k) {
                if (!pt[k].is_zero()) {
                    support |= bit(k + 1);
                }
            }
            w.support = mask_vertices(support);
            const auto order = acyclic_order(d, support);
            w.support_acyclic = std::holds_alternative<TopologicalOrder>(order);
            if (w.support_acyclic) {
                w.order = std::get<TopologicalOrder>(order).order;
                achievable_points.push_back(pt);
            }
        }
        all_achievable = all_achievable && w.integral && w.support_acyclic;
        r.achievability.push_back(std::move(w));
    }
    const bool decided = r.verdict.label == CaseLabel::I || r.verdict.label == CaseLabel::II ||
                         r.verdict.label == CaseLabel::III;
    r.certified = decided && all_achievable;
    r.inner_symmetric = n == 0 ? Rational(1) : reciprocal(fractional_dichromatic(d).value);
    if (r.certified && n > 0) {
        const Point target(n, symmetric_outer(r.polytope));
        r.symmetric_certificate = convex_combination(target, achievable_points);
    }
    return r;
}

std::string find_special_subdigraph(const Digraph& d) {
    const std::vector<std::pair<std::string, Digraph>> specials{{"c_5^2", special_c52_digraph()},
                                                                {"j_3", special_j3_digraph()}};
    require_size(d.size() <= kCanonicalMaxVertices, "find_special_subdigraph",
                 "n <= " + std::to_string(kCanonicalMaxVertices));
    for (const auto& [name, s] : specials) {
        const int k = s.size();
        if (k > d.size()) {
            continue;
        }
        const auto s_arcs = s.arcs();
        std::string found;
        // Vertex subsets of size k in increasing mask order, then all injective placements.
        for (VertexMask m = 0; m <= d.all() && found.empty(); ++m) {
            if (popcount(m) != k) {
                continue;
            }
            std::vector<int> vs = mask_vertices(m);
            std::vector<int> perm = vs;
            do {
                bool ok = true;
                for (const auto& [a, b] : s_arcs) {
                    if (!d.has_arc(perm[a - 1], perm[b - 1])) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found = name + " on " + set_str(vs);
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (m == d.all()) {
                break;
            }
        }
        if (!found.empty()) {
            return found;
        }
    }
    return "";
}

SymmetricDof symmetric_dof(const Digraph& d) {
    return symmetric_dof(d, d.size() == 0 ? Rational(1) : fractional_dichromatic(d).value);
}

SymmetricDof symmetric_dof(const Digraph& d, const Rational& chi_af) {
    SymmetricDof s;
    s.achievable = reciprocal(chi_af);
    s.outer = d.size() == 0 ? Rational(1) : symmetric_outer(outer_bound_polytope(d));
    if (s.achievable == s.outer) {
        s.status = DofStatus::optimal;
        return s;
    }
    // Linear rates can only drop when messages or side-information gaps are added, so a
    // special sub-digraph with the same fractional dichromatic number caps the linear rate.
    if (chi_af == Rational(5, 2)) {
        const std::string sub = find_special_subdigraph(d);
        if (!sub.empty()) {
            s.status = DofStatus::linear_optimal;
            s.certificate = sub;
            return s;
        }
    }
    s.status = DofStatus::gap;
    return s;
}

Rational maximize_linear(const RationalPolytope& p, const std::vector<Rational>& weights) {
    LinearProgram lp;
    lp.num_vars = p.dimension;
    lp.objective = weights;
    lp.maximize = true;
    lp.constraints = p.inequalities;
    const LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal) {
        throw InternalError("maximize_linear: LP not optimal");
    }
    return res.value;
}

Rational sum_dof(const RationalPolytope& p) { return maximize_linear(p, std::vector<Rational>(p.dimension, Rational(1))); }

}  // namespace timmp
