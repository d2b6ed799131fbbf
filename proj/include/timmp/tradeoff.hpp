#pragma once

#include "timmp/graph_core.hpp"

#include <string>
#include <vector>

namespace timmp {

enum class PatternEntry { one, zero, free };

/// Rank-minimization pattern of a conflict digraph after passing the messages in `passed`.
/// Entry (i,j) is one on the diagonal, zero for an unpassed conflict arc (i,j), free otherwise.
struct PassingPattern {
    int n = 0;
    std::vector<Arc> passed;
    /// Row-major n x n, entry (i,j) at index (i-1)*n + (j-1).
    std::vector<PatternEntry> entries;

    PatternEntry at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
    int free_count() const;
};

/// Validates that `passed` is a subset of the arcs with an acyclic arc digraph.
PassingPattern make_passing_pattern(const Digraph& conflict, const std::vector<Arc>& passed);

constexpr int kPatternMaxVertices = 5;
constexpr int kPatternMaxFree = 20;

/// Minimum GF(2) rank of a completion of the pattern. Requires n <= 5 and at most 20 free entries.
int pattern_minrank(const PassingPattern& pat);

struct TradeoffPoint {
    int p = 0;
    int r = 0;
    /// Smallest minimizing passing set (fewest arcs, then lexicographic).
    std::vector<Arc> witness;
};

/// r(p) for p = 0..p_max, exhaustive over acyclic passing sets of at most p arcs.
std::vector<TradeoffPoint> tradeoff_curve(const Digraph& conflict, int p_max, int jobs = 1);
std::vector<TradeoffPoint> tradeoff_curve(const BipartiteTopology& t, int p_max, int jobs = 1);

/// CSV with header "p,r,witness_arcs"; arcs written as "i->j" separated by ';'.
std::string tradeoff_csv(const std::vector<TradeoffPoint>& curve);

}  // namespace timmp
