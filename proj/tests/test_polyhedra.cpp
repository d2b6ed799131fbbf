#include "fixtures.hpp"
#include "oracles.hpp"

#include "timmp/errors.hpp"
#include "timmp/polyhedra.hpp"

#include <doctest.h>

#include <random>

using namespace timmp;

namespace {

const BinaryMatrix kTwoCycles({{1, 1, 1, 0}, {1, 0, 1, 1}});
const BinaryMatrix kThreeCycles({{1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 0}, {0, 1, 0, 1, 0, 1}});

}  // namespace

TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(BinaryMatrix({{1, 0}, {1}}), ValidationError);
    CHECK_THROWS_AS(BinaryMatrix({{1, 2}}), ValidationError);
    CHECK_THROWS_AS(named_matrix("circulant(2,3)"), ValidationError);
    CHECK_THROWS_AS(named_matrix("bogus"), ValidationError);
    CHECK(named_matrix("circulant(3,2)") == BinaryMatrix({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    CHECK(named_matrix("fano") == fano());
    CHECK(fano().rows == 7);
    CHECK(projective(3).rows == 4);
    CHECK(projective(3).cols == 4);
}

TEST_CASE("vertex enumeration on small polytopes") {
    RationalPolytope cube;
    cube.dimension = 3;
    cube.add_unit_box();
    CHECK(enumerate_vertices(cube).size() == 8);

    const auto c3 = covering_polytope(circulant(3, 2));
    const auto v = enumerate_vertices(c3);
    CHECK(std::find(v.begin(), v.end(), Point{Rational(1, 2), Rational(1, 2), Rational(1, 2)}) != v.end());

    RationalPolytope open;
    open.dimension = 2;
    open.add({Rational(1), Rational(0)}, Sense::le, Rational(1));
    CHECK_THROWS_AS(enumerate_vertices(open), ValidationError);
}

TEST_CASE("vertex enumeration matches the active-set oracle") {
    std::mt19937 rng(41);
    for (int k = 0; k < 100; ++k) {
        const auto p = oracle::random_polytope(2 + k % 4, 1 + k % 4, rng);
        CHECK(enumerate_vertices(p) == oracle::vertices(p));
    }
}

TEST_CASE("totally unimodular and balanced") {
    CHECK(is_totally_unimodular(kTwoCycles).result);
    CHECK(is_balanced(kTwoCycles).result);
    const auto tu = is_totally_unimodular(circulant(3, 2));
    CHECK_FALSE(tu.result);
    CHECK(tu.witness_rows.size() == 3);

    const auto bal = is_balanced(kThreeCycles);
    CHECK_FALSE(bal.result);
    CHECK(bal.witness_rows.size() == 3);
    CHECK(bal.witness_cols.size() == 3);
    CHECK(is_balanced(circulant(4, 2)).result);
}

TEST_CASE("ideal matrices") {
    for (int n = 3; n <= 8; ++n) {
        CHECK(is_ideal(circulant(n, 2)).result == (n % 2 == 0));
    }
    CHECK(is_ideal(circulant(6, 3)).result);
    CHECK(is_ideal(circulant(9, 3)).result);
    CHECK(is_ideal(circulant(8, 4)).result);
    CHECK(is_ideal(kTwoCycles).result);
    const auto three = is_ideal(kThreeCycles);
    CHECK_FALSE(three.result);
    REQUIRE(three.mni);
    CHECK(three.mni->name == "circulant(3,2)");
    CHECK(three.mni->relation == "submatrix");
    CHECK(kThreeCycles.submatrix(three.mni->rows, three.mni->cols) == circulant(3, 2));
    CHECK_FALSE(is_ideal(fano()).result);
    CHECK_FALSE(is_ideal(projective(3)).result);
}

TEST_CASE("perfect matrices") {
    // Clique matrix of the bidirected C_5 (edges as cliques) is not perfect; K_4's is.
    CHECK_FALSE(is_perfect_matrix(circulant(5, 2)).result);
    CHECK(is_perfect_matrix(BinaryMatrix({{1, 1, 1, 1}})).result);
    CHECK(is_perfect_matrix(circulant(4, 2)).result);
}

TEST_CASE("MNI catalog lookups") {
    CHECK(is_mni_matrix(circulant(5, 2)).result);
    CHECK(is_mni_matrix(fano()).result);
    CHECK(is_mni_matrix(projective(4)).result);
    CHECK_FALSE(is_mni_matrix(circulant(4, 2)).result);
    for (const auto& entry : mni_catalog()) {
        CHECK_FALSE(is_ideal(entry.matrix).result);
        const auto hit = find_mni_submatrix(entry.matrix);
        REQUIRE(hit);
        CHECK(hit->name == entry.name);
    }
}

TEST_CASE("MNI minors") {
    // Deleting column 4 of this matrix leaves circulant(3,2) on columns 1..3.
    const BinaryMatrix m({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(permutation_equivalent(covering_minor(m, {3}, {}), circulant(3, 2)));
    const auto minor = find_mni_minor(m);
    REQUIRE(minor);
    CHECK(minor->name == "circulant(3,2)");
    CHECK(permutation_equivalent(covering_minor(m, minor->deleted, minor->contracted), circulant(3, 2)));
    // A row {1} dominates every row through column 1, so no circulant(3,2) minor survives.
    const BinaryMatrix blocked({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 0, 0}});
    CHECK(find_mni_submatrix(blocked).has_value());
    CHECK_FALSE(find_mni_minor(blocked).has_value());
}

TEST_CASE("permutation equivalence") {
    const BinaryMatrix a({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    const BinaryMatrix b({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}});
    CHECK(permutation_equivalent(a, b));
    CHECK_FALSE(permutation_equivalent(a, BinaryMatrix({{1, 1, 1}, {0, 1, 1}, {1, 0, 1}})));
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(is_ideal(BinaryMatrix(2, 11)), SizeGuardError);
}
