#pragma once

#include "timmp/coloring.hpp"
#include "timmp/enumeration.hpp"
#include "timmp/graph_core.hpp"
#include "timmp/polyhedra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace timmp {

/// Box, clique (|Q| >= 2) and chordless dicycle (|C| >= 3) inequalities over d_1..d_n.
/// Bidirected pairs enter only through the clique containing them.
RationalPolytope outer_bound_polytope(const Digraph& d);

enum class CaseLabel { I, II, III, special, undecided };

std::string to_string(CaseLabel c);

struct CaseVerdict {
    CaseLabel label = CaseLabel::undecided;
    /// "c_5^2" or "j_3" when label == special.
    std::string special_name;

    bool has_long_dicycle = false;
    bool clique_matrix_perfect = false;
    bool has_large_clique = false;
    /// Unset when the check was not reached.
    std::optional<bool> dicycle_matrix_ideal;
    /// Case III failure: vertices left after deleting a triangle transversal
    /// whose remaining dicycle matrix is not ideal, with the MNI witness found there.
    std::vector<int> reduced_vertices;
    std::optional<MniHit> reduced_mni_submatrix;
    std::optional<MniHit> reduced_mni_minor;
    bool intersection_condition = true;

    /// Human-readable evidence lines.
    std::vector<std::string> evidence;
};

/// Perfect digraph: no induced dicycle of length >= 3 and S(d) perfect.
bool is_perfect_digraph(const Digraph& d);
/// S(d) perfect, decided by integrality of the clique packing polytope.
bool symmetric_part_perfect(const Digraph& d);

/// Canonical matches of the two special instances.
Digraph special_c52_digraph();
Digraph special_j3_digraph();
/// "c_5^2", "j_3" or "" for other digraphs.
std::string special_instance_name(const Digraph& d);

CaseVerdict classify_case(const Digraph& d);

struct PointWitness {
    Point point;
    bool integral = false;
    /// Support vertices (integral points only).
    std::vector<int> support;
    bool support_acyclic = false;
    /// Topological decoding order of the support when acyclic.
    std::vector<int> order;
};

/// The symmetric point written as a convex combination of achievable integral points.
struct ConvexCertificate {
    Point target;
    std::vector<Point> points;
    std::vector<Rational> coefficients;
    bool verified = false;
};

struct DoFRegion {
    RationalPolytope polytope;
    CaseVerdict verdict;
    std::vector<Point> extreme_points;
    std::vector<PointWitness> achievability;
    /// Case in {I,II,III} and every extreme point integral with acyclic support.
    bool certified = false;
    /// 1/χ_{A,f}.
    Rational inner_symmetric;
    std::optional<ConvexCertificate> symmetric_certificate;
};

DoFRegion dof_region(const Digraph& d);

/// Max t with (t,...,t) in the polytope (all coefficients nonnegative).
Rational symmetric_outer(const RationalPolytope& p);

/// Expresses `target` as a convex combination of `points`; verified by exact re-substitution.
std::optional<ConvexCertificate> convex_combination(const Point& target, const std::vector<Point>& points);

enum class DofStatus { optimal, linear_optimal, gap };

std::string to_string(DofStatus s);

struct SymmetricDof {
    Rational achievable;
    Rational outer;
    DofStatus status = DofStatus::gap;
    /// For linear_optimal: which special instance bounds the linear rate, and on which vertices.
    std::string certificate;
};

/// Searches for a sub-digraph (vertex and arc deletions) isomorphic to a special instance.
/// Returns "<name> on {v1,...}" or "" when none exists.
std::string find_special_subdigraph(const Digraph& d);

SymmetricDof symmetric_dof(const Digraph& d);
SymmetricDof symmetric_dof(const Digraph& d, const Rational& chi_af);

/// Maximum of weights·d over the polytope, as an exact LP.
Rational maximize_linear(const RationalPolytope& p, const std::vector<Rational>& weights);
Rational sum_dof(const RationalPolytope& p);

}  // namespace timmp
