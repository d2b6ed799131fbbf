#include "timmp/graph_core.hpp"

#include "timmp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace timmp {

std::vector<int> mask_vertices(VertexMask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    while (m != 0) {
        out.push_back(__builtin_ctzll(m) + 1);
        m &= m - 1;
    }
    return out;
}

VertexMask vertices_mask(const std::vector<int>& vs) {
    VertexMask m = 0;
    for (int v : vs) {
        m |= bit(v);
    }
    return m;
}

void BipartiteTopology::validate() const {
    if (K <= 0 || K > kMaxVertices) {
        throw ValidationError("topology K must be in 1.." + std::to_string(kMaxVertices));
    }
    if (static_cast<int>(transmit_sets.size()) != K) {
        throw ValidationError("topology must list a transmit set for every receiver 1..K");
    }
    for (const auto& [j, set] : transmit_sets) {
        if (j < 1 || j > K) {
            throw ValidationError("receiver index " + std::to_string(j) + " out of range");
        }
        for (int i : set) {
            if (i < 1 || i > K) {
                throw ValidationError("transmitter index " + std::to_string(i) + " out of range in T_" +
                                      std::to_string(j));
            }
        }
        if (std::find(set.begin(), set.end(), j) == set.end()) {
            throw ValidationError("T_" + std::to_string(j) + " must contain " + std::to_string(j));
        }
    }
}

Digraph::Digraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw ValidationError("digraph vertex count must be in 0.." + std::to_string(kMaxVertices));
    }
    out_.assign(n, 0);
    in_.assign(n, 0);
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
    for (const auto& [u, v] : arcs) {
        add_arc(u, v);
    }
}

void Digraph::check_vertex(int v) const {
    if (v < 1 || v > n_) {
        throw ValidationError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }
}

void Digraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    out_[u - 1] |= bit(v);
    in_[v - 1] |= bit(u);
}

void Digraph::remove_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    out_[u - 1] &= ~bit(v);
    in_[v - 1] &= ~bit(u);
}

std::size_t Digraph::arc_count() const {
    std::size_t c = 0;
    for (VertexMask m : out_) {
        c += popcount(m);
    }
    return c;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    for (int u = 1; u <= n_; ++u) {
        for (int v : mask_vertices(out_[u - 1])) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

Digraph Digraph::induced(VertexMask mask, std::vector<int>* labels) const {
    const std::vector<int> vs = mask_vertices(mask & all());
    Digraph sub(static_cast<int>(vs.size()));
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = 0; b < vs.size(); ++b) {
            if (a != b && has_arc(vs[a], vs[b])) {
                sub.add_arc(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
            }
        }
    }
    if (labels != nullptr) {
        *labels = vs;
    }
    return sub;
}

bool Digraph::is_acyclic(VertexMask mask) const {
    // Repeatedly peel vertices with no in-neighbor inside the remaining set.
    VertexMask rest = mask & all();
    while (rest != 0) {
        VertexMask sources = 0;
        for (VertexMask m = rest; m != 0; m &= m - 1) {
            const int v = __builtin_ctzll(m) + 1;
            if ((in_[v - 1] & rest) == 0) {
                sources |= bit(v);
            }
        }
        if (sources == 0) {
            return false;
        }
        rest &= ~sources;
    }
    return true;
}

bool UndirectedGraph::has_edge(int u, int v) const {
    const auto e = std::make_pair(std::min(u, v), std::max(u, v));
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<VertexMask> UndirectedGraph::adjacency() const {
    std::vector<VertexMask> adj(n, 0);
    for (const auto& [u, v] : edges) {
        adj[u - 1] |= bit(v);
        adj[v - 1] |= bit(u);
    }
    return adj;
}

void DecodingOrder::validate(int n) const {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(n);
    std::iota(expect.begin(), expect.end(), 1);
    if (sorted != expect) {
        throw ValidationError("decoding order is not a permutation of 1.." + std::to_string(n));
    }
}

BipartiteTopology regular_topology(int K, int L) {
    if (K < 1 || L < 1 || L > K) {
        throw ValidationError("regular topology requires 1 <= L <= K");
    }
    BipartiteTopology t;
    t.K = K;
    for (int j = 1; j <= K; ++j) {
        std::vector<int> set;
        for (int s = 0; s < L; ++s) {
            set.push_back((j - 1 + s) % K + 1);
        }
        std::sort(set.begin(), set.end());
        t.transmit_sets[j] = set;
    }
    return t;
}

Digraph build_conflict_digraph(const BipartiteTopology& t) {
    t.validate();
    Digraph d(t.K);
    for (const auto& [j, set] : t.transmit_sets) {
        for (int i : set) {
            if (i != j) {
                d.add_arc(i, j);
            }
        }
    }
    return d;
}

Digraph complement(const Digraph& d) {
    Digraph c(d.size());
    for (int u = 1; u <= d.size(); ++u) {
        for (int v = 1; v <= d.size(); ++v) {
            if (u != v && !d.has_arc(u, v)) {
                c.add_arc(u, v);
            }
        }
    }
    return c;
}

DerivedViews derived_views(const Digraph& d) {
    DerivedViews views{complement(d), UndirectedGraph{d.size(), {}}, UndirectedGraph{d.size(), {}}};
    for (int u = 1; u <= d.size(); ++u) {
        for (int v = u + 1; v <= d.size(); ++v) {
            const bool f = d.has_arc(u, v);
            const bool b = d.has_arc(v, u);
            if (f && b) {
                views.symmetric_part.edges.emplace_back(u, v);
            }
            if (f || b) {
                views.underlying.edges.emplace_back(u, v);
            }
        }
    }
    return views;
}

AcyclicResult acyclic_order(const Digraph& d) { return acyclic_order(d, d.all()); }

AcyclicResult acyclic_order(const Digraph& d, VertexMask mask) {
    mask &= d.all();
    TopologicalOrder topo;
    VertexMask rest = mask;
    while (rest != 0) {
        int pick = 0;
        for (VertexMask m = rest; m != 0; m &= m - 1) {
            const int v = __builtin_ctzll(m) + 1;
            if ((d.in_mask(v) & rest) == 0) {
                pick = v;
                break;
            }
        }
        if (pick == 0) {
            // Every remaining vertex has an in-neighbor inside; walk backwards until a repeat.
            std::vector<int> walk;
            std::vector<int> seen_at(d.size() + 1, -1);
            int v = __builtin_ctzll(rest) + 1;
            while (seen_at[v] < 0) {
                seen_at[v] = static_cast<int>(walk.size());
                walk.push_back(v);
                v = __builtin_ctzll(d.in_mask(v) & rest) + 1;
            }
            std::vector<int> cyc(walk.begin() + seen_at[v], walk.end());
            std::reverse(cyc.begin(), cyc.end());
            auto smallest = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), smallest, cyc.end());
            return WitnessCycle{cyc};
        }
        topo.order.push_back(pick);
        rest &= ~bit(pick);
    }
    return topo;
}

namespace {

struct Tarjan {
    const Digraph& d;
    std::vector<int> index, low;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    explicit Tarjan(const Digraph& g)
        : d(g), index(g.size() + 1, -1), low(g.size() + 1, 0), on_stack(g.size() + 1, false) {}

    void visit(int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : mask_vertices(d.out_mask(v))) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int w = 0;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(comp);
        }
    }
};

}  // namespace

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    Tarjan t(d);
    for (int v = 1; v <= d.size(); ++v) {
        if (t.index[v] < 0) {
            t.visit(v);
        }
    }
    // Tarjan emits sink components first.
    std::reverse(t.comps.begin(), t.comps.end());
    return t.comps;
}

bool is_strongly_connected(const Digraph& d) { return d.size() <= 1 || strong_components(d).size() == 1; }

std::uint64_t adjacency_code(const Digraph& d) {
    if (d.size() > kCanonicalMaxVertices) {
        throw SizeGuardError("adjacency code: n <= " + std::to_string(kCanonicalMaxVertices));
    }
    std::uint64_t code = 0;
    for (int u = 1; u <= d.size(); ++u) {
        for (int v = 1; v <= d.size(); ++v) {
            if (u != v) {
                code = (code << 1) | (d.has_arc(u, v) ? 1U : 0U);
            }
        }
    }
    return code;
}

Digraph digraph_from_code(int n, std::uint64_t code) {
    Digraph d(n);
    int pos = n * (n - 1) - 1;
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (u != v) {
                if ((code >> pos) & 1U) {
                    d.add_arc(u, v);
                }
                --pos;
            }
        }
    }
    return d;
}

namespace {

std::string encoding_string(int n, std::uint64_t code) {
    std::string bits;
    for (int pos = n * (n - 1) - 1; pos >= 0; --pos) {
        bits.push_back(((code >> pos) & 1U) ? '1' : '0');
    }
    return std::to_string(n) + ":" + bits;
}

}  // namespace

Digraph digraph_from_encoding(const std::string& encoding) {
    const auto colon = encoding.find(':');
    if (colon == std::string::npos) {
        throw ValidationError("malformed canonical encoding '" + encoding + "'");
    }
    int n = 0;
    try {
        n = std::stoi(encoding.substr(0, colon));
    } catch (const std::exception&) {
        throw ValidationError("malformed canonical encoding '" + encoding + "'");
    }
    const std::string bits = encoding.substr(colon + 1);
    if (n < 0 || n > kCanonicalMaxVertices || static_cast<int>(bits.size()) != n * (n - 1)) {
        throw ValidationError("malformed canonical encoding '" + encoding + "'");
    }
    std::uint64_t code = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ValidationError("malformed canonical encoding '" + encoding + "'");
        }
        code = (code << 1) | (c == '1' ? 1U : 0U);
    }
    return digraph_from_code(n, code);
}

Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
    Digraph out(d.size());
    std::vector<int> position(d.size() + 1);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        position[perm[i]] = static_cast<int>(i) + 1;
    }
    for (const auto& [u, v] : d.arcs()) {
        out.add_arc(position[u], position[v]);
    }
    return out;
}

CanonicalForm canonical_form(const Digraph& d) {
    const int n = d.size();
    if (n > kCanonicalMaxVertices) {
        throw SizeGuardError("canonical_form: n <= " + std::to_string(kCanonicalMaxVertices));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    CanonicalForm best;
    bool have = false;
    do {
        // Build the code bit by bit and abandon the permutation once it exceeds the best prefix.
        std::uint64_t code = 0;
        int remaining = n * (n - 1);
        bool pruned = false;
        for (int a = 0; a < n && !pruned; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a == b) {
                    continue;
                }
                code = (code << 1) | (d.has_arc(perm[a], perm[b]) ? 1U : 0U);
                --remaining;
                if (have && code > (best.code >> remaining)) {
                    pruned = true;
                    break;
                }
            }
        }
        if (!pruned && (!have || code < best.code)) {
            best.code = code;
            best.permutation = perm;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.encoding = encoding_string(n, best.code);
    return best;
}

}  // namespace timmp
