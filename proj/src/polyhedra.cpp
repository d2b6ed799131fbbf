#include "timmp/polyhedra.hpp"

#include "timmp/errors.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <map>
#include <regex>
#include <set>

namespace timmp {

BinaryMatrix::BinaryMatrix(std::vector<std::vector<int>> entries)
    : rows(static_cast<int>(entries.size())), cols(entries.empty() ? 0 : static_cast<int>(entries[0].size())),
      data(std::move(entries)) {
    validate();
}

void BinaryMatrix::validate() const {
    if (rows < 0 || cols < 0 || static_cast<int>(data.size()) != rows) {
        throw ValidationError("matrix row count does not match data");
    }
    for (const auto& r : data) {
        if (static_cast<int>(r.size()) != cols) {
            throw ValidationError("matrix rows must all have " + std::to_string(cols) + " entries");
        }
        for (int e : r) {
            if (e != 0 && e != 1) {
                throw ValidationError("matrix entries must be 0 or 1");
            }
        }
    }
}

std::uint64_t BinaryMatrix::row_mask(int i) const {
    if (cols > 64) {
        throw SizeGuardError("row_mask: cols <= 64");
    }
    std::uint64_t m = 0;
    for (int j = 0; j < cols; ++j) {
        if (data[i][j] != 0) {
            m |= std::uint64_t{1} << j;
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::submatrix(const std::vector<int>& row_sel, const std::vector<int>& col_sel) const {
    BinaryMatrix out(static_cast<int>(row_sel.size()), static_cast<int>(col_sel.size()));
    for (std::size_t i = 0; i < row_sel.size(); ++i) {
        for (std::size_t j = 0; j < col_sel.size(); ++j) {
            out.data[i][j] = data[row_sel[i]][col_sel[j]];
        }
    }
    return out;
}

void RationalPolytope::add(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != dimension) {
        throw ValidationError("inequality length does not match polytope dimension");
    }
    inequalities.push_back(LinearConstraint{std::move(coeffs), sense, std::move(rhs)});
}

void RationalPolytope::add_unit_box() {
    for (int k = 0; k < dimension; ++k) {
        std::vector<Rational> c(dimension, Rational(0));
        c[k] = Rational(1);
        add(c, Sense::ge, Rational(0));
        add(c, Sense::le, Rational(1));
    }
}

namespace {

Rational dot(const std::vector<Rational>& a, const Point& x) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero()) {
            s += a[i] * x[i];
        }
    }
    return s;
}

}  // namespace

bool RationalPolytope::contains(const Point& point) const {
    for (const auto& c : inequalities) {
        const Rational lhs = dot(c.coeffs, point);
        if ((c.sense == Sense::le && lhs > c.rhs) || (c.sense == Sense::ge && lhs < c.rhs) ||
            (c.sense == Sense::eq && lhs != c.rhs)) {
            return false;
        }
    }
    return true;
}

int RationalPolytope::tight_count(const Point& point) const {
    int c = 0;
    for (const auto& ineq : inequalities) {
        if (dot(ineq.coeffs, point) == ineq.rhs) {
            ++c;
        }
    }
    return c;
}

int RationalPolytope::active_rank(const Point& point) const {
    std::vector<std::vector<Rational>> rows;
    for (const auto& ineq : inequalities) {
        if (dot(ineq.coeffs, point) == ineq.rhs) {
            rows.push_back(ineq.coeffs);
        }
    }
    return matrix_rank(std::move(rows));
}

bool is_integral(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& r) { return r.is_integer(); });
}

std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i ? "," : "") + p[i].pretty();
    }
    return s + ")";
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r][c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) {
                continue;
            }
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) {
                rows[r][k] -= f * rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

using IntVec = std::vector<mpz_class>;
using ZeroSet = std::bitset<256>;

void make_primitive(IntVec& v) {
    mpz_class g = 0;
    for (const auto& e : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    if (g > 1) {
        for (auto& e : v) {
            mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        }
    }
}

IntVec to_integer_row(const std::vector<Rational>& coeffs, const Rational& rhs, int sign) {
    mpz_class l = 1;
    for (const auto& c : coeffs) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs.raw().get_den_mpz_t());
    IntVec row;
    row.reserve(coeffs.size() + 1);
    for (const auto& c : coeffs) {
        mpq_class v = c.raw() * l * sign;
        row.push_back(v.get_num());
    }
    // Homogenized: a·x - b·t <= 0.
    mpq_class v = rhs.raw() * l * (-sign);
    row.push_back(v.get_num());
    make_primitive(row);
    return row;
}

mpz_class idot(const IntVec& a, const IntVec& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) {
            s += a[i] * b[i];
        }
    }
    return s;
}

struct Ray {
    IntVec v;
    ZeroSet zero;
};

}  // namespace

std::vector<Point> enumerate_vertices(const RationalPolytope& p) {
    const int d = p.dimension;
    require_size(d <= kVertexEnumMaxDimension, "enumerate_vertices",
                 "dimension <= " + std::to_string(kVertexEnumMaxDimension));
    require_size(static_cast<int>(p.inequalities.size()) <= kVertexEnumMaxConstraints, "enumerate_vertices",
                 "constraints <= " + std::to_string(kVertexEnumMaxConstraints));
    const int D = d + 1;

    // Homogeneous rows A y <= 0 with y = (x, t); the last row is -t <= 0.
    std::vector<IntVec> rows;
    for (const auto& c : p.inequalities) {
        if (static_cast<int>(c.coeffs.size()) != d) {
            throw ValidationError("inequality length does not match polytope dimension");
        }
        if (c.sense == Sense::le || c.sense == Sense::eq) {
            rows.push_back(to_integer_row(c.coeffs, c.rhs, 1));
        }
        if (c.sense == Sense::ge || c.sense == Sense::eq) {
            rows.push_back(to_integer_row(c.coeffs, c.rhs, -1));
        }
    }
    IntVec t_row(D, 0);
    t_row[d] = -1;
    rows.push_back(t_row);
    const std::size_t H = rows.size();

    // Pick D linearly independent rows for the initial simplicial cone.
    std::vector<std::size_t> basis_rows;
    std::vector<std::vector<Rational>> echelon;
    for (std::size_t r = 0; r < H && static_cast<int>(basis_rows.size()) < D; ++r) {
        std::vector<std::vector<Rational>> trial = echelon;
        std::vector<Rational> row;
        for (const auto& e : rows[r]) {
            row.emplace_back(mpq_class(e));
        }
        trial.push_back(row);
        if (matrix_rank(trial) > static_cast<int>(echelon.size())) {
            echelon.push_back(row);
            basis_rows.push_back(r);
        }
    }
    if (static_cast<int>(basis_rows.size()) < D) {
        throw ValidationError("enumerate_vertices: polytope is not bounded (constraint rank too low)");
    }

    // Initial rays: columns of -A0^{-1}.
    std::vector<std::vector<mpq_class>> aug(D, std::vector<mpq_class>(2 * D, 0));
    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < D; ++j) {
            aug[i][j] = rows[basis_rows[i]][j];
        }
        aug[i][D + i] = 1;
    }
    for (int c = 0; c < D; ++c) {
        int piv = c;
        while (sgn(aug[piv][c]) == 0) {
            ++piv;
        }
        std::swap(aug[c], aug[piv]);
        const mpq_class pv = aug[c][c];
        for (auto& e : aug[c]) {
            e /= pv;
        }
        for (int r = 0; r < D; ++r) {
            if (r != c && sgn(aug[r][c]) != 0) {
                const mpq_class f = aug[r][c];
                for (int k = 0; k < 2 * D; ++k) {
                    aug[r][k] -= f * aug[c][k];
                }
            }
        }
    }
    std::vector<bool> processed(H, false);
    std::vector<Ray> rays;
    for (int j = 0; j < D; ++j) {
        mpz_class l = 1;
        for (int i = 0; i < D; ++i) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), aug[i][D + j].get_den_mpz_t());
        }
        Ray ray;
        for (int i = 0; i < D; ++i) {
            mpq_class v = -aug[i][D + j] * l;
            ray.v.push_back(v.get_num());
        }
        make_primitive(ray.v);
        rays.push_back(std::move(ray));
    }
    for (std::size_t r : basis_rows) {
        processed[r] = true;
        for (auto& ray : rays) {
            if (sgn(idot(rows[r], ray.v)) == 0) {
                ray.zero.set(r);
            }
        }
    }

    for (std::size_t r = 0; r < H; ++r) {
        if (processed[r]) {
            continue;
        }
        processed[r] = true;
        std::vector<int> s(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = sgn(idot(rows[r], rays[i].v));
        }
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (s[i] <= 0) {
                Ray kept = rays[i];
                if (s[i] == 0) {
                    kept.zero.set(r);
                }
                next.push_back(std::move(kept));
            }
        }
        for (std::size_t a = 0; a < rays.size(); ++a) {
            if (s[a] <= 0) {
                continue;
            }
            for (std::size_t b = 0; b < rays.size(); ++b) {
                if (s[b] >= 0) {
                    continue;
                }
                const ZeroSet common = rays[a].zero & rays[b].zero;
                if (static_cast<int>(common.count()) < D - 2) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t c = 0; c < rays.size() && adjacent; ++c) {
                    if (c != a && c != b && (rays[c].zero & common) == common) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                const mpz_class sa = idot(rows[r], rays[a].v);
                const mpz_class sb = idot(rows[r], rays[b].v);
                Ray ray;
                ray.v.resize(D);
                for (int k = 0; k < D; ++k) {
                    ray.v[k] = sa * rays[b].v[k] - sb * rays[a].v[k];
                }
                make_primitive(ray.v);
                ray.zero = common;
                ray.zero.set(r);
                next.push_back(std::move(ray));
            }
        }
        rays = std::move(next);
    }

    std::set<Point> found;
    for (const auto& ray : rays) {
        if (sgn(ray.v[d]) <= 0) {
            continue;
        }
        Point x;
        for (int k = 0; k < d; ++k) {
            x.emplace_back(mpq_class(ray.v[k], ray.v[d]));
        }
        found.insert(std::move(x));
    }
    return {found.begin(), found.end()};
}

BinaryMatrix incidence_matrix(const StructureFamily& family, int n) {
    BinaryMatrix m(static_cast<int>(family.members.size()), n);
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        for (int v : family.members[i]) {
            if (v < 1 || v > n) {
                throw ValidationError("family member vertex " + std::to_string(v) + " out of range");
            }
            m.data[i][v - 1] = 1;
        }
    }
    return m;
}

BinaryMatrix circulant(int n, int r) {
    if (n < 1 || r < 1 || r > n) {
        throw ValidationError("circulant(n,r) requires 1 <= r <= n");
    }
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < r; ++k) {
            m.data[i][(i + k) % n] = 1;
        }
    }
    return m;
}

BinaryMatrix projective(int n) {
    if (n < 2) {
        throw ValidationError("projective(n) requires n >= 2");
    }
    BinaryMatrix m(n + 1, n + 1);
    for (int j = 1; j <= n; ++j) {
        m.data[0][j] = 1;
        m.data[j][0] = 1;
        m.data[j][j] = 1;
    }
    return m;
}

BinaryMatrix fano() {
    const std::vector<int> seed{1, 1, 0, 1, 0, 0, 0};
    BinaryMatrix m(7, 7);
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            m.data[i][(i + j) % 7] = seed[j];
        }
    }
    return m;
}

BinaryMatrix named_matrix(const std::string& spec) {
    static const std::regex circ(R"(\s*circulant\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex proj(R"(\s*projective\s*\(\s*(\d+)\s*\)\s*)");
    std::smatch mt;
    if (std::regex_match(spec, mt, circ)) {
        return circulant(std::stoi(mt[1]), std::stoi(mt[2]));
    }
    if (std::regex_match(spec, mt, proj)) {
        return projective(std::stoi(mt[1]));
    }
    if (spec == "fano") {
        return fano();
    }
    throw ValidationError("unknown named matrix '" + spec + "'");
}

RationalPolytope packing_polytope(const BinaryMatrix& m) {
    RationalPolytope p;
    p.dimension = m.cols;
    p.add_unit_box();
    for (const auto& row : m.data) {
        std::vector<Rational> c(row.begin(), row.end());
        p.add(std::move(c), Sense::le, Rational(1));
    }
    return p;
}

RationalPolytope covering_polytope(const BinaryMatrix& m) {
    RationalPolytope p;
    p.dimension = m.cols;
    p.add_unit_box();
    for (const auto& row : m.data) {
        std::vector<Rational> c(row.begin(), row.end());
        p.add(std::move(c), Sense::ge, Rational(1));
    }
    return p;
}

namespace {

// Calls f on every k-subset of {0..n-1} in lexicographic order; stops when f returns true.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) {
        idx[i] = i;
    }
    if (k > n) {
        return false;
    }
    while (true) {
        if (f(idx)) {
            return true;
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return false;
        }
        ++idx[i];
        for (int j = i + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// Bareiss fraction-free determinant.
long long bareiss_det(std::vector<std::vector<long long>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    long long prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) {
                return 0;
            }
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

void guard_entries(const BinaryMatrix& m, const char* op) {
    m.validate();
    require_size(m.rows * m.cols <= kSubmatrixMaxEntries, op,
                 "rows*cols <= " + std::to_string(kSubmatrixMaxEntries));
}

void guard_cols(const BinaryMatrix& m, const char* op) {
    m.validate();
    require_size(m.cols <= kMniMaxCols, op, "cols <= " + std::to_string(kMniMaxCols));
}

}  // namespace

MatrixVerdict is_totally_unimodular(const BinaryMatrix& m) {
    guard_entries(m, "is_totally_unimodular");
    MatrixVerdict v{"tu", true, {}, {}, std::nullopt, std::nullopt};
    for (int k = 1; k <= std::min(m.rows, m.cols) && v.result; ++k) {
        for_each_combination(m.rows, k, [&](const std::vector<int>& rs) {
            return for_each_combination(m.cols, k, [&](const std::vector<int>& cs) {
                std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j) {
                        sub[i][j] = m.data[rs[i]][cs[j]];
                    }
                }
                const long long det = bareiss_det(sub);
                if (det < -1 || det > 1) {
                    v.result = false;
                    v.witness_rows = rs;
                    v.witness_cols = cs;
                    return true;
                }
                return false;
            });
        });
    }
    return v;
}

MatrixVerdict is_balanced(const BinaryMatrix& m) {
    guard_entries(m, "is_balanced");
    MatrixVerdict v{"balanced", true, {}, {}, std::nullopt, std::nullopt};
    for (int k = 3; k <= std::min(m.rows, m.cols) && v.result; k += 2) {
        for_each_combination(m.rows, k, [&](const std::vector<int>& rs) {
            return for_each_combination(m.cols, k, [&](const std::vector<int>& cs) {
                for (int i = 0; i < k; ++i) {
                    int c = 0;
                    for (int j = 0; j < k; ++j) {
                        c += m.data[rs[i]][cs[j]];
                    }
                    if (c != 2) {
                        return false;
                    }
                }
                for (int j = 0; j < k; ++j) {
                    int c = 0;
                    for (int i = 0; i < k; ++i) {
                        c += m.data[rs[i]][cs[j]];
                    }
                    if (c != 2) {
                        return false;
                    }
                }
                v.result = false;
                v.witness_rows = rs;
                v.witness_cols = cs;
                return true;
            });
        });
    }
    return v;
}

MatrixVerdict is_ideal(const BinaryMatrix& m) {
    guard_cols(m, "is_ideal");
    MatrixVerdict v{"ideal", true, {}, {}, std::nullopt, std::nullopt};
    for (const auto& pt : enumerate_vertices(covering_polytope(m))) {
        if (!is_integral(pt)) {
            v.result = false;
            v.fractional_vertex = pt;
            break;
        }
    }
    if (!v.result) {
        v.mni = find_mni_submatrix(m);
        if (!v.mni) {
            v.mni = find_mni_minor(m);
        }
    }
    return v;
}

MatrixVerdict is_perfect_matrix(const BinaryMatrix& m) {
    guard_cols(m, "is_perfect_matrix");
    MatrixVerdict v{"perfect", true, {}, {}, std::nullopt, std::nullopt};
    for (const auto& pt : enumerate_vertices(packing_polytope(m))) {
        if (!is_integral(pt)) {
            v.result = false;
            v.fractional_vertex = pt;
            break;
        }
    }
    return v;
}

const std::vector<MniCatalogEntry>& mni_catalog() {
    static const std::vector<MniCatalogEntry> catalog = [] {
        std::vector<MniCatalogEntry> c;
        auto add_circ = [&](int n, int r) {
            if (n <= kMniMaxCols) {
                c.push_back({"circulant(" + std::to_string(n) + "," + std::to_string(r) + ")", circulant(n, r)});
            }
        };
        for (int n = 3; n <= 17; n += 2) {
            add_circ(n, 2);
        }
        for (auto [n, r] : std::vector<std::pair<int, int>>{
                 {5, 3}, {8, 3}, {11, 3}, {14, 3}, {17, 3}, {7, 4}, {11, 4}, {9, 5}, {11, 6}, {13, 7}}) {
            add_circ(n, r);
        }
        for (int n = 3; n + 1 <= kMniMaxCols; ++n) {
            c.push_back({"projective(" + std::to_string(n) + ")", projective(n)});
        }
        c.push_back({"fano", fano()});
        std::stable_sort(c.begin(), c.end(), [](const MniCatalogEntry& a, const MniCatalogEntry& b) {
            if (a.matrix.cols != b.matrix.cols) {
                return a.matrix.cols > b.matrix.cols;
            }
            if (a.matrix.rows != b.matrix.rows) {
                return a.matrix.rows > b.matrix.rows;
            }
            return a.name < b.name;
        });
        return c;
    }();
    return catalog;
}

namespace {

// Projection of a row bitmask onto the listed columns, packed into low bits.
std::uint64_t project(std::uint64_t row, const std::vector<int>& cols, std::size_t count) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < count; ++k) {
        if ((row >> cols[k]) & 1U) {
            out |= std::uint64_t{1} << k;
        }
    }
    return out;
}

// Finds a bijection phi from pattern columns (0..q-1) to `target_cols` such that every
// pattern row maps onto some target row (or, with `exact`, the row multisets coincide).
bool match_columns(const std::vector<std::uint64_t>& pattern, const std::vector<std::uint64_t>& target,
                   const std::vector<int>& target_cols, bool exact, std::vector<int>& phi) {
    const std::size_t q = target_cols.size();
    std::vector<int> identity(q);
    for (std::size_t i = 0; i < q; ++i) {
        identity[i] = static_cast<int>(i);
    }
    std::vector<bool> used(q, false);
    phi.assign(q, -1);
    std::vector<int> mapped;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
        // Check consistency of the first k assigned columns.
        std::multiset<std::uint64_t> tproj;
        for (std::uint64_t t : target) {
            tproj.insert(project(t, mapped, k));
        }
        if (exact) {
            std::multiset<std::uint64_t> pproj;
            for (std::uint64_t p : pattern) {
                pproj.insert(project(p, identity, k));
            }
            if (pproj != tproj) {
                return false;
            }
        } else {
            for (std::uint64_t p : pattern) {
                if (tproj.find(project(p, identity, k)) == tproj.end()) {
                    return false;
                }
            }
        }
        if (k == q) {
            return true;
        }
        for (std::size_t c = 0; c < q; ++c) {
            if (used[c]) {
                continue;
            }
            used[c] = true;
            phi[k] = static_cast<int>(c);
            mapped.push_back(target_cols[c]);
            if (rec(k + 1)) {
                return true;
            }
            mapped.pop_back();
            used[c] = false;
        }
        return false;
    };
    return rec(0);
}

std::vector<std::uint64_t> row_masks(const BinaryMatrix& m) {
    std::vector<std::uint64_t> out;
    for (int i = 0; i < m.rows; ++i) {
        out.push_back(m.row_mask(i));
    }
    return out;
}

}  // namespace

bool permutation_equivalent(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        return false;
    }
    std::vector<int> cols(b.cols);
    for (int j = 0; j < b.cols; ++j) {
        cols[j] = j;
    }
    std::vector<int> phi;
    return match_columns(row_masks(a), row_masks(b), cols, true, phi);
}

std::optional<MniHit> find_mni_submatrix(const BinaryMatrix& m) {
    guard_cols(m, "find_mni_submatrix");
    const auto target = row_masks(m);
    for (const auto& entry : mni_catalog()) {
        const BinaryMatrix& M = entry.matrix;
        if (M.cols > m.cols || M.rows > m.rows) {
            continue;
        }
        const auto pattern = row_masks(M);
        std::optional<MniHit> hit;
        for_each_combination(m.cols, M.cols, [&](const std::vector<int>& cs) {
            // Distinct restrictions of m's rows to cs, remembering the first row of each.
            std::map<std::uint64_t, int> first_row;
            std::vector<std::uint64_t> distinct;
            for (int i = 0; i < m.rows; ++i) {
                std::uint64_t r = 0;
                for (std::size_t k = 0; k < cs.size(); ++k) {
                    if ((target[i] >> cs[k]) & 1U) {
                        r |= std::uint64_t{1} << cs[k];
                    }
                }
                if (first_row.emplace(r, i).second) {
                    distinct.push_back(r);
                }
            }
            if (static_cast<int>(distinct.size()) < M.rows) {
                return false;
            }
            std::vector<int> phi;
            if (!match_columns(pattern, distinct, cs, false, phi)) {
                return false;
            }
            MniHit h;
            h.name = entry.name;
            h.relation = "submatrix";
            for (int j = 0; j < M.cols; ++j) {
                h.cols.push_back(cs[phi[j]]);
            }
            for (std::uint64_t p : pattern) {
                std::uint64_t r = 0;
                for (int j = 0; j < M.cols; ++j) {
                    if ((p >> j) & 1U) {
                        r |= std::uint64_t{1} << h.cols[j];
                    }
                }
                h.rows.push_back(first_row.at(r));
            }
            hit = h;
            return true;
        });
        if (hit) {
            return hit;
        }
    }
    return std::nullopt;
}

BinaryMatrix covering_minor(const BinaryMatrix& m, const std::vector<int>& deleted,
                            const std::vector<int>& contracted) {
    std::uint64_t del = 0;
    std::uint64_t removed = 0;
    for (int j : deleted) {
        del |= std::uint64_t{1} << j;
        removed |= std::uint64_t{1} << j;
    }
    for (int j : contracted) {
        removed |= std::uint64_t{1} << j;
    }
    std::vector<int> keep_cols;
    for (int j = 0; j < m.cols; ++j) {
        if (!((removed >> j) & 1U)) {
            keep_cols.push_back(j);
        }
    }
    std::set<std::uint64_t> rows;
    for (int i = 0; i < m.rows; ++i) {
        const std::uint64_t r = m.row_mask(i);
        if (r & del) {
            continue;
        }
        rows.insert(r & ~removed);
    }
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t r : rows) {
        bool dominated = false;
        for (std::uint64_t s : rows) {
            if (s != r && (s & r) == s) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            minimal.push_back(r);
        }
    }
    BinaryMatrix out(static_cast<int>(minimal.size()), static_cast<int>(keep_cols.size()));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        for (std::size_t j = 0; j < keep_cols.size(); ++j) {
            out.data[i][j] = (minimal[i] >> keep_cols[j]) & 1U ? 1 : 0;
        }
    }
    return out;
}

std::optional<MniHit> find_mni_minor(const BinaryMatrix& m) {
    guard_cols(m, "find_mni_minor");
    const int q = m.cols;
    // Enumerate minors by number of removed columns, then lexicographically.
    for (int removed = 0; removed <= q; ++removed) {
        std::optional<MniHit> hit;
        for_each_combination(q, removed, [&](const std::vector<int>& cs) {
            for (std::uint64_t mode = 0; mode < (std::uint64_t{1} << removed); ++mode) {
                std::vector<int> deleted;
                std::vector<int> contracted;
                for (int k = 0; k < removed; ++k) {
                    ((mode >> k) & 1U ? deleted : contracted).push_back(cs[k]);
                }
                const BinaryMatrix minor = covering_minor(m, deleted, contracted);
                for (const auto& entry : mni_catalog()) {
                    if (permutation_equivalent(minor, entry.matrix)) {
                        hit = MniHit{entry.name, "minor", {}, {}, deleted, contracted};
                        return true;
                    }
                }
            }
            return false;
        });
        if (hit) {
            return hit;
        }
    }
    return std::nullopt;
}

MatrixVerdict is_mni_matrix(const BinaryMatrix& m) {
    m.validate();
    MatrixVerdict v;
    v.kind = "mni";
    for (const auto& entry : mni_catalog()) {
        if (entry.matrix.rows == m.rows && entry.matrix.cols == m.cols && permutation_equivalent(m, entry.matrix)) {
            v.result = true;
            MniHit hit;
            hit.name = entry.name;
            hit.relation = "equivalent";
            v.mni = hit;
            return v;
        }
    }
    if (m.cols <= kMniMaxCols) {
        v.mni = find_mni_submatrix(m);
        if (!v.mni) {
            v.mni = find_mni_minor(m);
        }
    }
    return v;
}

}  // namespace timmp
