#include "fixtures.hpp"
#include "oracles.hpp"

#include "timmp/errors.hpp"
#include "timmp/graph_core.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace timmp;

TEST_CASE("conflict digraph from a topology") {
    BipartiteTopology t;
    t.K = 3;
    t.transmit_sets = {{1, {1, 2}}, {2, {2}}, {3, {1, 3}}};
    CHECK(build_conflict_digraph(t).arcs() == std::vector<Arc>{{1, 3}, {2, 1}});

    CHECK(build_conflict_digraph(regular_topology(5, 2)) == Digraph(5, {{2, 1}, {3, 2}, {4, 3}, {5, 4}, {1, 5}}));
    CHECK(build_conflict_digraph(regular_topology(4, 1)).arc_count() == 0);
    CHECK(build_conflict_digraph(regular_topology(4, 4)) == fixtures::bidirected_clique(4));
    CHECK(regular_topology(5, 2).transmit_sets.at(5) == std::vector<int>{1, 5});
    CHECK_THROWS_AS(regular_topology(3, 4), ValidationError);
}

TEST_CASE("topology validation") {
    BipartiteTopology t;
    t.K = 2;
    t.transmit_sets = {{1, {1, 3}}, {2, {2}}};
    CHECK_THROWS_AS(t.validate(), ValidationError);
    t.transmit_sets = {{1, {2}}, {2, {2}}};
    CHECK_THROWS_AS(t.validate(), ValidationError);
    t.transmit_sets = {{1, {1}}};
    CHECK_THROWS_AS(t.validate(), ValidationError);
}

TEST_CASE("digraph rejects self-loops and bad vertices") {
    Digraph d(3);
    CHECK_THROWS_AS(d.add_arc(1, 1), ValidationError);
    CHECK_THROWS_AS(d.add_arc(0, 2), ValidationError);
    CHECK_THROWS_AS(d.add_arc(1, 4), ValidationError);
}

TEST_CASE("derived views") {
    const auto v = derived_views(fixtures::directed_cycle(3));
    CHECK(v.complement.arcs() == std::vector<Arc>{{1, 3}, {2, 1}, {3, 2}});
    CHECK(v.symmetric_part.edges.empty());
    CHECK(v.underlying.edges.size() == 3);

    const auto k3 = derived_views(fixtures::bidirected_clique(3));
    CHECK(k3.complement.arc_count() == 0);
    CHECK(k3.symmetric_part.edges == k3.underlying.edges);
    CHECK(k3.symmetric_part.edges.size() == 3);

    const auto f5 = derived_views(fixtures::fig5b());
    CHECK(f5.symmetric_part.edges == std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {4, 6}});
}

TEST_CASE("acyclic order and witness cycles") {
    auto r = acyclic_order(Digraph(3, {{1, 2}, {2, 3}}));
    REQUIRE(std::holds_alternative<TopologicalOrder>(r));
    CHECK(std::get<TopologicalOrder>(r).order == std::vector<int>{1, 2, 3});

    r = acyclic_order(fixtures::directed_cycle(3));
    REQUIRE(std::holds_alternative<WitnessCycle>(r));
    CHECK(std::get<WitnessCycle>(r).cycle == std::vector<int>{1, 2, 3});

    r = acyclic_order(Digraph(4));
    CHECK(std::get<TopologicalOrder>(r).order == std::vector<int>{1, 2, 3, 4});

    r = acyclic_order(Digraph(3, {{3, 1}, {2, 1}}));
    CHECK(std::get<TopologicalOrder>(r).order == std::vector<int>{2, 3, 1});
}

TEST_CASE("strong components") {
    const auto c = strong_components(fixtures::fig8b());
    CHECK(c == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
    CHECK(strong_components(Digraph(3, {{1, 2}, {2, 3}})).size() == 3);

    Digraph k4p = fixtures::bidirected_clique(4);
    Digraph big(5);
    for (auto [u, v] : k4p.arcs()) {
        big.add_arc(u, v);
    }
    big.add_arc(4, 5);
    CHECK(strong_components(big) == std::vector<std::vector<int>>{{1, 2, 3, 4}, {5}});
    CHECK(is_strongly_connected(fixtures::directed_cycle(5)));
    CHECK_FALSE(is_strongly_connected(big));
}

TEST_CASE("acyclic order agrees with strong components on random digraphs") {
    std::mt19937 rng(11);
    for (int k = 0; k < 300; ++k) {
        const int n = 1 + k % 8;
        const Digraph d = oracle::random_digraph(n, 0.2, rng);
        const auto r = acyclic_order(d);
        const bool singletons = strong_components(d).size() == static_cast<std::size_t>(n);
        CHECK(std::holds_alternative<TopologicalOrder>(r) == singletons);
        CHECK(d.is_acyclic() == oracle::acyclic(d, d.all()));
        if (auto* t = std::get_if<TopologicalOrder>(&r)) {
            std::vector<int> pos(n + 1);
            for (int i = 0; i < n; ++i) {
                pos[t->order[i]] = i;
            }
            for (auto [u, v] : d.arcs()) {
                CHECK(pos[u] < pos[v]);
            }
        } else {
            const auto& cyc = std::get<WitnessCycle>(r).cycle;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                CHECK(d.has_arc(cyc[i], cyc[(i + 1) % cyc.size()]));
            }
        }
    }
}

TEST_CASE("canonical form") {
    CHECK(canonical_form(Digraph(3, {{1, 2}, {2, 3}, {3, 1}})).encoding ==
          canonical_form(Digraph(3, {{2, 1}, {1, 3}, {3, 2}})).encoding);
    CHECK(canonical_form(Digraph(3, {{1, 2}})).encoding != canonical_form(Digraph(3, {{1, 2}, {2, 1}})).encoding);
    CHECK_THROWS_AS(canonical_form(Digraph(9)), SizeGuardError);

    for (int n = 2; n <= 3; ++n) {
        std::set<std::string> seen;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1))); ++code) {
            seen.insert(canonical_form(digraph_from_code(n, code)).encoding);
        }
        CHECK(seen.size() == (n == 2 ? 3U : 16U));
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(3);
    for (int k = 0; k < 20; ++k) {
        const int n = 3 + k % 4;
        const Digraph d = oracle::random_digraph(n, 0.35, rng);
        const auto cf = canonical_form(d);
        CHECK(relabel(d, cf.permutation) == digraph_from_encoding(cf.encoding));
        CHECK(adjacency_code(digraph_from_encoding(cf.encoding)) == cf.code);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        for (int t = 0; t < 100; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(d, perm)).encoding == cf.encoding);
        }
    }
}

TEST_CASE("code round trip and complement involution") {
    std::mt19937 rng(5);
    for (int k = 0; k < 100; ++k) {
        const Digraph d = oracle::random_digraph(1 + k % 6, 0.5, rng);
        CHECK(digraph_from_code(d.size(), adjacency_code(d)) == d);
        CHECK(complement(complement(d)) == d);
        const auto v = derived_views(d);
        for (auto [a, b] : v.symmetric_part.edges) {
            CHECK(v.underlying.has_edge(a, b));
        }
    }
}
