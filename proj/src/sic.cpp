#include "timmp/sic.hpp"

#include "timmp/coloring.hpp"
#include "timmp/enumeration.hpp"
#include "timmp/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace timmp {

std::string to_string(Criticality c) {
    switch (c) {
        case Criticality::critical:
            return "critical";
        case Criticality::non_critical:
            return "non_critical";
        case Criticality::unknown:
            return "unknown";
    }
    return "unknown";
}

SicInstance make_sic_instance(const Digraph& conflict) { return {conflict, complement(conflict)}; }

Digraph enhance_side_info(const SicInstance& inst, const DecodingOrder& order) {
    const int n = inst.side_info.size();
    order.validate(n);
    Digraph out = inst.side_info;
    for (std::size_t a = 0; a < order.order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.order.size(); ++b) {
            out.add_arc(order.order[a], order.order[b]);
        }
    }
    return out;
}

namespace {

// A GF(2) subspace of {0,1}^n (n <= 6) stored as the set of its vectors.
std::uint64_t span_with(std::uint64_t space, std::uint64_t vec) {
    if ((space >> vec) & 1U) {
        return space;
    }
    std::uint64_t out = space;
    for (std::uint64_t m = space; m != 0; m &= m - 1) {
        const std::uint64_t s = static_cast<std::uint64_t>(__builtin_ctzll(m));
        out |= std::uint64_t{1} << (s ^ vec);
    }
    return out;
}

}  // namespace

int minrank_pattern(int n, const std::vector<VertexMask>& free_cols) {
    require_size(n <= kMinrankMaxVertices, "minrank", "n <= " + std::to_string(kMinrankMaxVertices));
    if (static_cast<int>(free_cols.size()) != n) {
        throw InternalError("minrank pattern size mismatch");
    }
    if (n == 0) {
        return 0;
    }
    std::unordered_set<std::uint64_t> states{1};
    for (int j = 1; j <= n; ++j) {
        const VertexMask free = free_cols[j - 1] & ~bit(j) & full_mask(n);
        std::unordered_set<std::uint64_t> next;
        for (std::uint64_t s : states) {
            // Enumerate all submasks of the free positions.
            VertexMask sub = free;
            while (true) {
                next.insert(span_with(s, bit(j) | sub));
                if (sub == 0) {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
        states = std::move(next);
    }
    int best = n;
    for (std::uint64_t s : states) {
        best = std::min(best, __builtin_ctzll(static_cast<unsigned long long>(popcount(s))));
    }
    return best;
}

int minrank_gf2(const Digraph& side_info) {
    const int n = side_info.size();
    require_size(n <= kMinrankMaxVertices, "minrank_gf2", "n <= " + std::to_string(kMinrankMaxVertices));
    std::vector<VertexMask> free(n);
    for (int j = 1; j <= n; ++j) {
        free[j - 1] = side_info.in_mask(j);
    }
    return minrank_pattern(n, free);
}

SingleRoundRate best_single_round_rate(const SicInstance& inst) {
    const int n = inst.conflict.size();
    require_size(n <= kSingleRoundMaxVertices, "best_single_round_rate",
                 "n <= " + std::to_string(kSingleRoundMaxVertices));
    DecodingOrder order;
    order.order.resize(n);
    std::iota(order.order.begin(), order.order.end(), 1);
    SingleRoundRate best{n + 1, order};
    do {
        const int r = minrank_gf2(enhance_side_info(inst, order));
        if (r < best.rate) {
            best = {r, order};
        }
    } while (std::next_permutation(order.order.begin(), order.order.end()));
    if (n == 0) {
        best.rate = 0;
    }
    return best;
}

CoverBounds cover_bounds(const SicInstance& inst) {
    const Digraph& d = inst.conflict;
    const int n = d.size();
    require_size(n <= kCoverMaxVertices, "cover_bounds", "n <= " + std::to_string(kCoverMaxVertices));
    CoverBounds b;
    b.clique_cover = Rational(dichromatic_number(d).value);

    // Cycle covering: disjoint chordless dicycles plus a remainder colored with acyclic sets.
    const auto cycles = minimal_dicycles(d).masks();
    std::map<VertexMask, int> chi_cache;
    auto chi_a = [&](VertexMask m) {
        auto it = chi_cache.find(m);
        if (it != chi_cache.end()) {
            return it->second;
        }
        const int v = m == 0 ? 0 : dichromatic_number(d.induced(m)).value;
        chi_cache.emplace(m, v);
        return v;
    };
    std::map<VertexMask, Rational> memo;
    std::function<Rational(VertexMask)> cycle_cost = [&](VertexMask m) -> Rational {
        auto it = memo.find(m);
        if (it != memo.end()) {
            return it->second;
        }
        Rational best(chi_a(m));
        // Cycles are taken in increasing mask order so each collection is counted once.
        for (VertexMask c : cycles) {
            if ((c & m) == c) {
                const int len = popcount(c);
                const Rational cost = Rational(len, len - 1) + cycle_cost(m & ~c);
                best = min(best, cost);
            }
        }
        memo.emplace(m, best);
        return best;
    };
    b.cycle_cover = cycle_cost(d.all());

    // Weakly degenerate partition: subset DP over the block containing the lowest vertex.
    const auto wd = weak_degeneracy_table(d);
    const std::size_t total = std::size_t{1} << n;
    std::vector<int> cost(total, 0);
    for (std::size_t s = 1; s < total; ++s) {
        const auto mask = static_cast<VertexMask>(s);
        const VertexMask low = mask & (~mask + 1);
        const VertexMask rest = mask & ~low;
        int best = kMaxVertices * 2;
        VertexMask sub = rest;
        while (true) {
            const VertexMask block = sub | low;
            best = std::min(best, wd[block] + 1 + cost[mask & ~block]);
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & rest;
        }
        cost[s] = best;
    }
    b.weakly_degenerate_cover = Rational(cost[total - 1]);
    return b;
}

Reduction reduce_instance(const SicInstance& inst) {
    const Digraph& d = inst.conflict;
    Reduction r;
    if (d.size() == 0) {
        r.certified = true;
        r.kept_case = CaseLabel::I;
        r.rate = Rational(0);
        return r;
    }
    std::optional<Rational> best;
    std::vector<int> best_comp;
    for (const auto& comp : strong_components(d)) {
        const Rational chi = fractional_dichromatic(d.induced(vertices_mask(comp))).value;
        if (!best || chi > *best) {
            best = chi;
            best_comp = comp;
        }
    }
    r.rate = *best;
    r.reduced = d.induced(vertices_mask(best_comp), &r.kept_vertices);
    for (int v = 1; v <= d.size(); ++v) {
        if (!std::binary_search(best_comp.begin(), best_comp.end(), v)) {
            r.reducible_vertices.push_back(v);
        }
    }
    r.kept_case = classify_case(r.reduced).label;
    r.certified = r.kept_case == CaseLabel::I || r.kept_case == CaseLabel::II || r.kept_case == CaseLabel::III;
    return r;
}

namespace {

// Arcs traversed by a chordless dicycle (both arcs for a bidirected pair).
std::vector<Arc> cycle_arcs(const std::vector<int>& c) {
    std::vector<Arc> out;
    if (c.size() == 2) {
        out.emplace_back(c[0], c[1]);
        out.emplace_back(c[1], c[0]);
        return out;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.emplace_back(c[i], c[(i + 1) % c.size()]);
    }
    return out;
}

}  // namespace

std::vector<ArcLabel> critical_arcs(const Digraph& d) {
    const auto cycles = minimal_dicycles(d).members;
    std::set<Arc> on_cycle;
    for (const auto& c : cycles) {
        for (const auto& a : cycle_arcs(c)) {
            on_cycle.insert(a);
        }
    }

    std::set<Arc> critical;
    std::map<Arc, std::string> why;
    if (!cycles.empty()) {
        std::size_t shortest = cycles.front().size();
        for (const auto& c : cycles) {
            shortest = std::min(shortest, c.size());
        }
        std::vector<const std::vector<int>*> at_min;
        for (const auto& c : cycles) {
            if (c.size() == shortest) {
                at_min.push_back(&c);
            }
        }
        if (at_min.size() == 1 && is_ideal(incidence_matrix(minimal_dicycles(d), d.size())).result) {
            for (const auto& a : cycle_arcs(*at_min.front())) {
                critical.insert(a);
                why[a] = "on the unique shortest chordless dicycle of an ideal dicycle matrix";
            }
        }
    }
    if (is_perfect_digraph(d)) {
        const auto cliques = maximal_cliques(d).members;
        std::size_t largest = 0;
        for (const auto& q : cliques) {
            largest = std::max(largest, q.size());
        }
        std::vector<const std::vector<int>*> at_max;
        for (const auto& q : cliques) {
            if (q.size() == largest) {
                at_max.push_back(&q);
            }
        }
        if (largest >= 2 && at_max.size() == 1) {
            const auto& q = *at_max.front();
            for (int u : q) {
                for (int v : q) {
                    if (u != v && !critical.count({u, v})) {
                        critical.insert({u, v});
                        why[{u, v}] = "inside the unique maximum clique of a perfect digraph";
                    }
                }
            }
        }
    }

    std::vector<ArcLabel> out;
    for (const auto& a : d.arcs()) {
        ArcLabel l{a, Criticality::unknown, "uniqueness hypotheses do not apply"};
        if (!on_cycle.count(a)) {
            l.label = Criticality::non_critical;
            l.reason = "lies on no chordless dicycle";
        } else if (critical.count(a)) {
            l.label = Criticality::critical;
            l.reason = why[a];
        }
        out.push_back(std::move(l));
    }
    return out;
}

bool is_chordal_bipartite_network(const Digraph& d) {
    const int k = d.size();
    require_size(2 * k <= kMaxVertices, "is_chordal_bipartite_network", "n <= 32");
    // Transmitter i is vertex i, receiver j is vertex k + j.
    const int n = 2 * k;
    std::vector<VertexMask> adj(n + 1, 0);
    for (int j = 1; j <= k; ++j) {
        for (int i = 1; i <= k; ++i) {
            if (i == j || d.has_arc(i, j)) {
                adj[i] |= bit(k + j);
                adj[k + j] |= bit(i);
            }
        }
    }
    std::vector<int> path;
    std::function<bool(int, VertexMask)> extend = [&](int s, VertexMask on_path) {
        const int last = path.back();
        const VertexMask inner = on_path & ~bit(last) & ~bit(s);
        for (VertexMask m = adj[last] & ~on_path; m != 0; m &= m - 1) {
            const int w = __builtin_ctzll(m) + 1;
            if (w < s || (adj[w] & inner) != 0) {
                continue;
            }
            if (path.size() >= 2 && (adj[w] & bit(s))) {
                if (path.size() + 1 >= 6) {
                    return true;
                }
                continue;
            }
            path.push_back(w);
            if (extend(s, on_path | bit(w))) {
                return true;
            }
            path.pop_back();
        }
        return false;
    };
    for (int s = 1; s <= n; ++s) {
        path.assign(1, s);
        if (extend(s, bit(s))) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<std::vector<int>> underlying_cliques(const Digraph& d) {
    Digraph u(d.size());
    for (const auto& [a, b] : d.arcs()) {
        u.add_arc(a, b);
        u.add_arc(b, a);
    }
    return maximal_cliques(u).members;
}

}  // namespace

HelpfulVerdict passing_is_helpful(const Digraph& d, const Arc& arc) {
    const auto [i, j] = arc;
    if (i < 1 || j < 1 || i > d.size() || j > d.size() || !d.has_arc(i, j)) {
        throw ValidationError("arc (" + std::to_string(i) + "," + std::to_string(j) + ") is not in the conflict digraph");
    }
    HelpfulVerdict v;
    const Digraph side = complement(d);
    Digraph enhanced = side;
    enhanced.add_arc(i, j);
    for (const auto& c : minimal_dicycles(enhanced).members) {
        for (const auto& a : cycle_arcs(c)) {
            if (a == arc) {
                v.witness = c;
                break;
            }
        }
        if (!v.witness.empty()) {
            break;
        }
    }
    Digraph reduced = d;
    reduced.remove_arc(i, j);
    v.underlying_cliques_changed = underlying_cliques(d) != underlying_cliques(reduced);
    if (d.size() <= kMinrankMaxVertices) {
        v.minrank_before = minrank_gf2(side);
        v.minrank_after = minrank_gf2(enhanced);
    }
    v.chordal_bipartite = is_chordal_bipartite_network(d);
    if (!v.witness.empty()) {
        v.helpful = true;
        v.reason = "passing closes a new chordless dicycle in the side information";
    } else if (v.chordal_bipartite) {
        v.helpful = false;
        v.reason = "chordal bipartite network and no new chordless dicycle";
    } else {
        v.reason = "no new chordless dicycle, but the network is not chordal bipartite";
    }
    return v;
}

}  // namespace timmp
