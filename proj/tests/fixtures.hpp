#pragma once

#include "timmp/graph_core.hpp"

#include <vector>

namespace fixtures {

using timmp::Digraph;

inline void bidirect(Digraph& d, int u, int v) {
    d.add_arc(u, v);
    d.add_arc(v, u);
}

/// 1 -> 2 -> ... -> k -> 1; for k == 2 a bidirected pair.
inline Digraph directed_cycle(int k) {
    Digraph d(k);
    for (int v = 1; v <= k; ++v) {
        d.add_arc(v, v % k + 1);
    }
    return d;
}

inline Digraph bidirected_clique(int k) {
    Digraph d(k);
    for (int u = 1; u <= k; ++u) {
        for (int v = u + 1; v <= k; ++v) {
            bidirect(d, u, v);
        }
    }
    return d;
}

inline Digraph bidirected_cycle(int k) {
    Digraph d(k);
    for (int v = 1; v <= k; ++v) {
        bidirect(d, v, v % k + 1);
    }
    return d;
}

/// Bidirected C_5 plus the chords i -> i+2.
inline Digraph fig4a() {
    Digraph d = bidirected_cycle(5);
    for (auto [u, v] : std::vector<timmp::Arc>{{1, 3}, {2, 4}, {3, 5}, {4, 1}, {5, 2}}) {
        d.add_arc(u, v);
    }
    return d;
}

/// Bidirected triangle {2,4,6} with a directed hexagon 1 -> 2 -> ... -> 6 -> 1.
inline Digraph fig5b() {
    Digraph d(6);
    bidirect(d, 2, 4);
    bidirect(d, 4, 6);
    bidirect(d, 2, 6);
    for (auto [u, v] : std::vector<timmp::Arc>{{1, 2}, {3, 4}, {5, 6}, {2, 3}, {4, 5}, {6, 1}}) {
        d.add_arc(u, v);
    }
    return d;
}

inline Digraph fig6a() { return Digraph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 3}}); }

inline Digraph fig6c() {
    return Digraph(6, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}, {2, 4}, {4, 6}, {6, 2}});
}

/// Bidirected triangle {1,2,3} sharing vertex 3 with the dicycle 3 -> 4 -> 5 -> 3.
inline Digraph fig7a() {
    Digraph d = Digraph(5, {{3, 4}, {4, 5}, {5, 3}});
    bidirect(d, 1, 2);
    bidirect(d, 2, 3);
    bidirect(d, 1, 3);
    return d;
}

inline Digraph fig7b() {
    Digraph d(6, {{1, 2}, {2, 3}, {3, 1}});
    bidirect(d, 4, 5);
    bidirect(d, 5, 6);
    bidirect(d, 4, 6);
    bidirect(d, 1, 5);
    bidirect(d, 2, 6);
    bidirect(d, 3, 4);
    return d;
}

/// Bidirected K_4 feeding the dicycle 5 -> 6 -> 7 -> 5.
inline Digraph fig8a() {
    Digraph d(7, {{5, 6}, {6, 7}, {7, 5}, {4, 5}});
    for (int u = 1; u <= 4; ++u) {
        for (int v = u + 1; v <= 4; ++v) {
            bidirect(d, u, v);
        }
    }
    return d;
}

/// Dicycle 1 -> 2 -> 3 -> 1 feeding the bidirected pair {4,5}.
inline Digraph fig8b() {
    Digraph d(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
    bidirect(d, 4, 5);
    return d;
}

/// Conflict digraph of the three-user helpfulness example.
inline Digraph fig12() { return Digraph(3, {{1, 2}, {1, 3}, {3, 1}, {2, 3}}); }

/// The six irreducible, all-arcs-critical, imperfect four-vertex digraphs:
/// C_4, then C_3 on {1,2,3} with vertex 4 attached by (b) a second triangle,
/// (c) a triangle plus a pair, (d-f) one, two or three bidirected pairs.
inline std::vector<Digraph> four_vertex_residuals() {
    std::vector<Digraph> out;
    out.push_back(directed_cycle(4));
    const Digraph c3(4, {{1, 2}, {2, 3}, {3, 1}});
    Digraph b = c3;
    b.add_arc(1, 4);
    b.add_arc(4, 3);
    out.push_back(b);
    Digraph c = b;
    bidirect(c, 2, 4);
    out.push_back(c);
    Digraph d = c3;
    bidirect(d, 1, 4);
    out.push_back(d);
    Digraph e = d;
    bidirect(e, 2, 4);
    out.push_back(e);
    Digraph f = e;
    bidirect(f, 3, 4);
    out.push_back(f);
    return out;
}

/// Arcs i -> j for i < j (receiver j hears transmitters 1..j).
inline Digraph triangular(int k) {
    Digraph d(k);
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            d.add_arc(i, j);
        }
    }
    return d;
}

}  // namespace fixtures
