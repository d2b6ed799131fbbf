#include "timmp/enumeration.hpp"

#include "timmp/errors.hpp"

#include <algorithm>
#include <functional>

namespace timmp {

std::string to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::clique:
            return "clique";
        case StructureKind::dicycle:
            return "dicycle";
        case StructureKind::acyclic_set:
            return "acyclic_set";
    }
    return "unknown";
}

std::vector<VertexMask> StructureFamily::masks() const {
    std::vector<VertexMask> out;
    out.reserve(members.size());
    for (const auto& m : members) {
        out.push_back(vertices_mask(m));
    }
    return out;
}

namespace {

void guard(const Digraph& d, const char* op) {
    require_size(d.size() <= kEnumerationMaxVertices, op, "n <= " + std::to_string(kEnumerationMaxVertices));
}

std::vector<VertexMask> symmetric_adjacency(const Digraph& d) {
    std::vector<VertexMask> adj(d.size());
    for (int v = 1; v <= d.size(); ++v) {
        adj[v - 1] = d.out_mask(v) & d.in_mask(v);
    }
    return adj;
}

void sort_sets(std::vector<std::vector<int>>& sets) {
    std::sort(sets.begin(), sets.end());
}

}  // namespace

StructureFamily maximal_cliques(const Digraph& d) {
    const auto adj = symmetric_adjacency(d);
    StructureFamily fam{StructureKind::clique, {}};
    std::function<void(VertexMask, VertexMask, VertexMask)> bron_kerbosch = [&](VertexMask r, VertexMask p,
                                                                               VertexMask x) {
        if (p == 0 && x == 0) {
            fam.members.push_back(mask_vertices(r));
            return;
        }
        // Pivot on the vertex of P union X with the most neighbors in P.
        int pivot = 0;
        int best = -1;
        for (VertexMask m = p | x; m != 0; m &= m - 1) {
            const int u = __builtin_ctzll(m) + 1;
            const int c = popcount(adj[u - 1] & p);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (VertexMask m = p & ~adj[pivot - 1]; m != 0; m &= m - 1) {
            const int v = __builtin_ctzll(m) + 1;
            bron_kerbosch(r | bit(v), p & adj[v - 1], x & adj[v - 1]);
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    if (d.size() > 0) {
        bron_kerbosch(0, d.all(), 0);
    }
    sort_sets(fam.members);
    return fam;
}

StructureFamily minimal_dicycles(const Digraph& d) {
    const int n = d.size();
    StructureFamily fam{StructureKind::dicycle, {}};
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (d.has_bidirected(u, v)) {
                fam.members.push_back({u, v});
            }
        }
    }
    // Longer chordless cycles: extend induced paths from their smallest vertex s.
    std::vector<int> path;
    std::function<void(int, VertexMask)> extend = [&](int s, VertexMask on_path) {
        const int last = path.back();
        const VertexMask earlier = on_path & ~bit(last);
        for (VertexMask m = d.out_mask(last) & ~on_path; m != 0; m &= m - 1) {
            const int w = __builtin_ctzll(m) + 1;
            if (w < s || d.has_arc(w, last)) {
                continue;
            }
            const VertexMask touching = (d.out_mask(w) | d.in_mask(w)) & earlier;
            if (path.size() == 1) {
                // w is the second vertex; the only earlier vertex is `last` itself.
                path.push_back(w);
                extend(s, on_path | bit(w));
                path.pop_back();
                continue;
            }
            if (touching == 0) {
                path.push_back(w);
                extend(s, on_path | bit(w));
                path.pop_back();
            } else if (touching == bit(s) && d.has_arc(w, s) && !d.has_arc(s, w)) {
                std::vector<int> cyc = path;
                cyc.push_back(w);
                fam.members.push_back(cyc);
            }
        }
    };
    for (int s = 1; s <= n; ++s) {
        path.assign(1, s);
        extend(s, bit(s));
    }
    std::sort(fam.members.begin(), fam.members.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> sa = a;
        std::vector<int> sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa != sb ? sa < sb : a < b;
    });
    return fam;
}

std::vector<VertexMask> all_acyclic_sets(const Digraph& d) {
    guard(d, "all_acyclic_sets");
    const std::size_t total = std::size_t{1} << d.size();
    std::vector<bool> acyclic(total, false);
    std::vector<VertexMask> out;
    acyclic[0] = true;
    for (std::size_t s = 1; s < total; ++s) {
        const auto mask = static_cast<VertexMask>(s);
        for (VertexMask m = mask; m != 0; m &= m - 1) {
            const int v = __builtin_ctzll(m) + 1;
            if ((d.in_mask(v) & mask) == 0 && acyclic[s & ~bit(v)]) {
                acyclic[s] = true;
                break;
            }
        }
        if (acyclic[s]) {
            out.push_back(mask);
        }
    }
    return out;
}

StructureFamily maximal_acyclic_sets(const Digraph& d) {
    guard(d, "maximal_acyclic_sets");
    const int n = d.size();
    StructureFamily fam{StructureKind::acyclic_set, {}};
    if (n == 0) {
        return fam;
    }
    std::function<void(int, VertexMask, VertexMask)> search = [&](int v, VertexMask chosen, VertexMask excluded) {
        if (v > n) {
            for (int u : mask_vertices(excluded)) {
                if (d.is_acyclic(chosen | bit(u))) {
                    return;
                }
            }
            fam.members.push_back(mask_vertices(chosen));
            return;
        }
        const VertexMask undecided = d.all() & ~(full_mask(v - 1));
        if (d.is_acyclic(chosen | bit(v))) {
            search(v + 1, chosen | bit(v), excluded);
            // Excluding v only pays off if some completion could make v unaddable.
            if (!d.is_acyclic(chosen | undecided)) {
                search(v + 1, chosen, excluded | bit(v));
            }
        } else {
            search(v + 1, chosen, excluded | bit(v));
        }
    };
    search(1, 0, 0);
    sort_sets(fam.members);
    return fam;
}

int mais_number(const Digraph& d) {
    guard(d, "mais_number");
    int best = 0;
    for (VertexMask m : maximal_acyclic_sets(d).masks()) {
        best = std::max(best, popcount(m));
    }
    return best;
}

std::vector<std::uint8_t> weak_degeneracy_table(const Digraph& d) {
    guard(d, "weak_degeneracy");
    const std::size_t total = std::size_t{1} << d.size();
    std::vector<std::uint8_t> m(total, 0);
    for (std::size_t s = 1; s < total; ++s) {
        const auto mask = static_cast<VertexMask>(s);
        int h = kMaxVertices;
        std::uint8_t sub = 0;
        for (VertexMask it = mask; it != 0; it &= it - 1) {
            const int v = __builtin_ctzll(it) + 1;
            const int deg = std::min(popcount(d.in_mask(v) & mask), popcount(d.out_mask(v) & mask));
            h = std::min(h, deg);
            sub = std::max(sub, m[s & ~bit(v)]);
        }
        m[s] = std::max<std::uint8_t>(sub, static_cast<std::uint8_t>(h));
    }
    return m;
}

int weak_degeneracy(const Digraph& d, VertexMask mask) {
    const Digraph sub = d.induced(mask);
    const auto table = weak_degeneracy_table(sub);
    return table.back();
}

DegeneracyProfile degeneracy_profile(const Digraph& d) {
    guard(d, "degeneracy_profile");
    DegeneracyProfile prof;
    prof.weak_degeneracy = d.size() == 0 ? 0 : weak_degeneracy_table(d).back();
    for (int v = 1; v <= d.size(); ++v) {
        prof.partial_clique_degree = std::max(prof.partial_clique_degree, popcount(d.in_mask(v)));
    }
    for (const auto& c : minimal_dicycles(d).members) {
        prof.dicycle_parities.insert(c.size() % 2 == 1 ? Parity::odd : Parity::even);
    }
    return prof;
}

}  // namespace timmp
