#include "fixtures.hpp"
#include "oracles.hpp"

#include "timmp/coloring.hpp"
#include "timmp/errors.hpp"
#include "timmp/sic.hpp"

#include <doctest.h>

#include <random>

using namespace timmp;

TEST_CASE("side information and decoding orders") {
    const auto inst = make_sic_instance(fixtures::directed_cycle(3));
    CHECK(inst.side_info.arcs() == std::vector<Arc>{{1, 3}, {2, 1}, {3, 2}});
    const Digraph e = enhance_side_info(inst, DecodingOrder{{1, 2, 3}});
    CHECK(e.arcs() == std::vector<Arc>{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 2}});
    CHECK_THROWS_AS(enhance_side_info(inst, DecodingOrder{{1, 1, 2}}), ValidationError);
}

TEST_CASE("minrank of standard side information") {
    CHECK(minrank_gf2(complement(fixtures::directed_cycle(3))) == 2);
    CHECK(minrank_gf2(fixtures::directed_cycle(5)) == 4);
    CHECK(minrank_gf2(complement(fixtures::bidirected_clique(3))) == 3);
    CHECK(minrank_gf2(complement(Digraph(4))) == 1);
    // Side information bidirected C_5 (conflict = its complement): minrank 3.
    CHECK(minrank_gf2(fixtures::bidirected_cycle(5)) == 3);
    CHECK_THROWS_AS(minrank_gf2(Digraph(7)), SizeGuardError);
}

TEST_CASE("minrank matches exhaustive completion") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> any(0, 255);
    for (int k = 0; k < 150; ++k) {
        const int n = 1 + k % 4;
        std::vector<VertexMask> free(n);
        for (int i = 0; i < n; ++i) {
            free[i] = static_cast<VertexMask>(any(rng)) & full_mask(n) & ~bit(i + 1);
        }
        CHECK(minrank_pattern(n, free) == oracle::minrank(n, free));
    }
}

TEST_CASE("single-round rate") {
    const auto r = best_single_round_rate(make_sic_instance(fixtures::directed_cycle(3)));
    CHECK(r.rate == 2);
    CHECK(r.order.order == std::vector<int>{1, 2, 3});
    CHECK(best_single_round_rate(make_sic_instance(fixtures::triangular(4))).rate == 1);
    CHECK(best_single_round_rate(make_sic_instance(fixtures::bidirected_clique(3))).rate == 3);
}

TEST_CASE("cover bounds") {
    const auto b = cover_bounds(make_sic_instance(fixtures::directed_cycle(5)));
    CHECK(b.clique_cover == Rational(2));
    CHECK(b.cycle_cover == Rational(5, 4));
    CHECK(b.weakly_degenerate_cover == Rational(2));

    const auto k3 = cover_bounds(make_sic_instance(fixtures::bidirected_clique(3)));
    CHECK(k3.clique_cover == Rational(3));
    CHECK(k3.cycle_cover == Rational(3));
    CHECK(k3.weakly_degenerate_cover == Rational(3));

    std::mt19937 rng(4);
    for (int k = 0; k < 40; ++k) {
        const Digraph d = oracle::random_digraph(2 + k % 5, 0.5, rng);
        const auto cb = cover_bounds(make_sic_instance(d));
        const Rational chi_af = fractional_dichromatic(d).value;
        CHECK(cb.cycle_cover >= chi_af);
        CHECK(cb.cycle_cover <= cb.clique_cover);
        CHECK(cb.weakly_degenerate_cover >= chi_af);
    }
}

TEST_CASE("reducibility") {
    const auto a = reduce_instance(make_sic_instance(fixtures::fig8a()));
    CHECK(a.kept_vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(a.reduced == fixtures::bidirected_clique(4));
    CHECK(a.rate == Rational(4));
    CHECK(a.certified);

    const auto b = reduce_instance(make_sic_instance(fixtures::fig8b()));
    CHECK(b.kept_vertices == std::vector<int>{4, 5});
    CHECK(b.reducible_vertices == std::vector<int>{1, 2, 3});
    CHECK(b.rate == Rational(2));
}

TEST_CASE("criticality labels") {
    std::map<Arc, Criticality> got;
    for (const auto& l : critical_arcs(fixtures::fig8b())) {
        got[l.arc] = l.label;
    }
    CHECK(got.at({4, 5}) == Criticality::critical);
    CHECK(got.at({5, 4}) == Criticality::critical);
    CHECK(got.at({3, 4}) == Criticality::non_critical);
    CHECK(got.at({1, 2}) == Criticality::unknown);

    for (const auto& l : critical_arcs(fixtures::directed_cycle(4))) {
        CHECK(l.label == Criticality::critical);
    }
}

TEST_CASE("chordal bipartite networks") {
    CHECK(is_chordal_bipartite_network(fixtures::fig12()));
    CHECK_FALSE(is_chordal_bipartite_network(fixtures::directed_cycle(3)));
    CHECK(is_chordal_bipartite_network(fixtures::triangular(4)));
    CHECK(is_chordal_bipartite_network(fixtures::bidirected_clique(4)));
}

TEST_CASE("helpful message passing") {
    const Digraph d = fixtures::fig12();
    const auto h13 = passing_is_helpful(d, {1, 3});
    REQUIRE(h13.helpful);
    CHECK(*h13.helpful);
    CHECK(h13.witness == std::vector<int>{1, 3, 2});
    CHECK(*h13.minrank_before == 3);
    CHECK(*h13.minrank_after == 2);

    const auto h31 = passing_is_helpful(d, {3, 1});
    REQUIRE(h31.helpful);
    CHECK_FALSE(*h31.helpful);
    CHECK(h31.chordal_bipartite);
    CHECK(*h31.minrank_after == 3);

    const auto h12 = passing_is_helpful(d, {1, 2});
    REQUIRE(h12.helpful);
    CHECK(*h12.helpful);
    CHECK(h12.witness == std::vector<int>{1, 2});

    CHECK_THROWS_AS(passing_is_helpful(d, {2, 1}), ValidationError);
}

namespace {

/// Brute force: some vertex subset of size >= 6 induces a single cycle.
bool has_long_induced_cycle(const Digraph& d) {
    const int k = d.size();
    const int n = 2 * k;
    auto adjacent = [&](int a, int b) {
        if ((a < k) == (b < k)) {
            return false;
        }
        const int tx = (a < k ? a : b) + 1;
        const int rx = (a < k ? b : a) - k + 1;
        return tx == rx || d.has_arc(tx, rx);
    };
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        if (__builtin_popcount(m) < 6) {
            continue;
        }
        bool ok = true;
        int first = -1;
        for (int v = 0; v < n && ok; ++v) {
            if (!((m >> v) & 1U)) {
                continue;
            }
            first = first < 0 ? v : first;
            int deg = 0;
            for (int u = 0; u < n; ++u) {
                deg += ((m >> u) & 1U) && adjacent(u, v);
            }
            ok = deg == 2;
        }
        if (!ok) {
            continue;
        }
        // Degree two everywhere; connected iff the walk from `first` covers m.
        int prev = -1;
        int cur = first;
        int steps = 0;
        do {
            int next = -1;
            for (int u = 0; u < n; ++u) {
                if (((m >> u) & 1U) && u != prev && adjacent(u, cur)) {
                    next = u;
                    break;
                }
            }
            prev = cur;
            cur = next;
            ++steps;
        } while (cur != first);
        if (steps == __builtin_popcount(m)) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("chordal bipartite test matches brute force") {
    std::mt19937 rng(19);
    for (int k = 0; k < 80; ++k) {
        const Digraph d = oracle::random_digraph(3 + k % 3, 0.35, rng);
        CHECK(is_chordal_bipartite_network(d) == !has_long_induced_cycle(d));
    }
}
