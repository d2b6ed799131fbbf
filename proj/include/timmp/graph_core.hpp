#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace timmp {

/// Vertex subset as a bitmask; bit (v-1) represents vertex v.
using VertexMask = std::uint64_t;
using Arc = std::pair<int, int>;

constexpr int kMaxVertices = 64;

inline VertexMask bit(int v) { return VertexMask{1} << (v - 1); }
inline VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
/// Vertices of a mask in increasing order.
std::vector<int> mask_vertices(VertexMask m);
VertexMask vertices_mask(const std::vector<int>& vs);

/// Uplink connectivity: receiver j hears the transmitters in transmit_sets[j].
struct BipartiteTopology {
    int K = 0;
    std::map<int, std::vector<int>> transmit_sets;

    /// Throws ValidationError unless every j in 1..K has a sorted, in-range set containing j.
    void validate() const;
};

/// Simple digraph on vertices 1..n without self-loops.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, const std::vector<Arc>& arcs);

    int size() const { return n_; }
    VertexMask all() const { return full_mask(n_); }

    void add_arc(int u, int v);
    void remove_arc(int u, int v);
    bool has_arc(int u, int v) const { return (out_[u - 1] >> (v - 1)) & 1U; }
    bool has_bidirected(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }

    VertexMask out_mask(int v) const { return out_[v - 1]; }
    VertexMask in_mask(int v) const { return in_[v - 1]; }

    std::size_t arc_count() const;
    /// Arcs sorted lexicographically.
    std::vector<Arc> arcs() const;

    /// Sub-digraph induced by `mask`, relabeled 1..k in increasing order of the
    /// original labels. `labels`, if given, receives the original label of each new vertex.
    Digraph induced(VertexMask mask, std::vector<int>* labels = nullptr) const;

    /// True iff the sub-digraph induced by `mask` has no directed cycle.
    bool is_acyclic(VertexMask mask) const;
    bool is_acyclic() const { return is_acyclic(all()); }

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.out_ == b.out_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexMask> out_;
    std::vector<VertexMask> in_;
};

struct UndirectedGraph {
    int n = 0;
    /// Edges {u,v} stored with u < v, sorted.
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int u, int v) const;
    /// Adjacency bitmask of every vertex (index v-1).
    std::vector<VertexMask> adjacency() const;
};

/// Total order on vertices; position 0 decodes first.
struct DecodingOrder {
    std::vector<int> order;

    /// Throws ValidationError unless `order` is a permutation of 1..n.
    void validate(int n) const;
};

BipartiteTopology regular_topology(int K, int L);
Digraph build_conflict_digraph(const BipartiteTopology& t);

struct DerivedViews {
    Digraph complement;
    UndirectedGraph symmetric_part;
    UndirectedGraph underlying;
};
DerivedViews derived_views(const Digraph& d);
Digraph complement(const Digraph& d);

struct TopologicalOrder {
    std::vector<int> order;
};
struct WitnessCycle {
    /// Directed cycle v0 -> v1 -> ... -> v0.
    std::vector<int> cycle;
};
using AcyclicResult = std::variant<TopologicalOrder, WitnessCycle>;

/// Topological order with smallest available source first, or a directed cycle.
AcyclicResult acyclic_order(const Digraph& d);
/// Same, restricted to the sub-digraph induced by `mask` (original labels).
AcyclicResult acyclic_order(const Digraph& d, VertexMask mask);

/// Strong components in topological order of the condensation; each sorted.
std::vector<std::vector<int>> strong_components(const Digraph& d);
bool is_strongly_connected(const Digraph& d);

constexpr int kCanonicalMaxVertices = 8;

struct CanonicalForm {
    /// "n:bits" with the row-major off-diagonal adjacency bitstring.
    std::string encoding;
    /// perm[i] = original vertex placed at canonical position i+1.
    std::vector<int> permutation;
    /// Bitstring as an integer, most significant bit first (numeric order = string order).
    std::uint64_t code = 0;
};
CanonicalForm canonical_form(const Digraph& d);
/// Adjacency bitstring of `d` under the identity labeling, as an integer.
std::uint64_t adjacency_code(const Digraph& d);
/// Inverse of adjacency_code.
Digraph digraph_from_code(int n, std::uint64_t code);
/// Decodes a canonical encoding string "n:bits".
Digraph digraph_from_encoding(const std::string& encoding);

/// Relabels `d` so that new vertex i+1 is old vertex perm[i].
Digraph relabel(const Digraph& d, const std::vector<int>& perm);

}  // namespace timmp
