#pragma once

#include "timmp/enumeration.hpp"
#include "timmp/lp.hpp"
#include "timmp/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace timmp {

struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> data;

    BinaryMatrix() = default;
    BinaryMatrix(int r, int c) : rows(r), cols(c), data(r, std::vector<int>(c, 0)) {}
    explicit BinaryMatrix(std::vector<std::vector<int>> entries);

    /// Throws ValidationError on ragged rows or entries other than 0/1.
    void validate() const;
    /// Row i as a column bitmask (bit j = column j, 0-based). Requires cols <= 64.
    std::uint64_t row_mask(int i) const;
    BinaryMatrix submatrix(const std::vector<int>& row_sel, const std::vector<int>& col_sel) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
};

/// H-representation {x : a_i·x (<=|>=|=) b_i}.
struct RationalPolytope {
    int dimension = 0;
    std::vector<LinearConstraint> inequalities;

    void add(std::vector<Rational> coeffs, Sense sense, Rational rhs);
    /// Adds 0 <= x_k <= 1 for every coordinate.
    void add_unit_box();
    bool contains(const std::vector<Rational>& point) const;
    /// Number of constraints satisfied with equality at `point`.
    int tight_count(const std::vector<Rational>& point) const;
    /// Rank of the coefficient rows tight at `point`.
    int active_rank(const std::vector<Rational>& point) const;
};

using Point = std::vector<Rational>;

bool is_integral(const Point& p);
std::string point_str(const Point& p);

constexpr int kVertexEnumMaxDimension = 10;
constexpr int kVertexEnumMaxConstraints = 64;

/// Exact extreme points (double description on the homogenized cone),
/// deduplicated and sorted lexicographically. Requires a bounded polytope.
std::vector<Point> enumerate_vertices(const RationalPolytope& p);

/// Rank of a set of rational row vectors.
int matrix_rank(std::vector<std::vector<Rational>> rows);

BinaryMatrix incidence_matrix(const StructureFamily& family, int n);

BinaryMatrix circulant(int n, int r);
BinaryMatrix projective(int n);
BinaryMatrix fano();
/// Parses "circulant(n,r)", "projective(n)", "fano"; throws ValidationError otherwise.
BinaryMatrix named_matrix(const std::string& spec);

/// {0 <= x <= 1, m x <= 1}.
RationalPolytope packing_polytope(const BinaryMatrix& m);
/// {0 <= y <= 1, m y >= 1}.
RationalPolytope covering_polytope(const BinaryMatrix& m);

struct MniHit {
    std::string name;
    /// "submatrix" or "minor".
    std::string relation;
    /// 0-based selections for submatrix hits.
    std::vector<int> rows;
    std::vector<int> cols;
    /// 0-based columns deleted (set to 1) / contracted (set to 0) for minor hits.
    std::vector<int> deleted;
    std::vector<int> contracted;
};

struct MatrixVerdict {
    std::string kind;
    bool result = false;
    /// Offending square submatrix (0-based rows/cols) for TU / balanced failures.
    std::vector<int> witness_rows;
    std::vector<int> witness_cols;
    /// Fractional extreme point for ideal / perfect failures.
    std::optional<Point> fractional_vertex;
    std::optional<MniHit> mni;
};

constexpr int kSubmatrixMaxEntries = 64;
constexpr int kMniMaxCols = 10;

MatrixVerdict is_totally_unimodular(const BinaryMatrix& m);
MatrixVerdict is_balanced(const BinaryMatrix& m);
MatrixVerdict is_ideal(const BinaryMatrix& m);
MatrixVerdict is_perfect_matrix(const BinaryMatrix& m);
/// True iff `m` is a catalog MNI matrix up to permutations; otherwise reports a
/// catalog member found as a submatrix or minor, if any (cols <= 10).
MatrixVerdict is_mni_matrix(const BinaryMatrix& m);

struct MniCatalogEntry {
    std::string name;
    BinaryMatrix matrix;
};
/// Known minimally non-ideal matrices with at most kMniMaxCols columns, largest first.
const std::vector<MniCatalogEntry>& mni_catalog();

/// True iff `a` equals `b` up to row and column permutations.
bool permutation_equivalent(const BinaryMatrix& a, const BinaryMatrix& b);

/// First catalog member (largest first) occurring as a row/column submatrix. Requires cols <= 10.
std::optional<MniHit> find_mni_submatrix(const BinaryMatrix& m);
/// First catalog member equal to a minor (deletions/contractions, then
/// dominating-row removal). Requires cols <= 10.
std::optional<MniHit> find_mni_minor(const BinaryMatrix& m);

/// Minor of a covering matrix: deleting column j drops the rows containing j,
/// contracting j removes the column; afterwards non-minimal and duplicate rows are dropped.
BinaryMatrix covering_minor(const BinaryMatrix& m, const std::vector<int>& deleted, const std::vector<int>& contracted);

}  // namespace timmp
