#pragma once

#include "timmp/dof_region.hpp"
#include "timmp/graph_core.hpp"
#include "timmp/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace timmp {

struct SicInstance {
    Digraph conflict;
    /// Complement of the conflict digraph: arc (i,j) iff receiver j knows W_i.
    Digraph side_info;
};

SicInstance make_sic_instance(const Digraph& conflict);

/// Side information after successive decoding: adds (i,j) whenever i precedes j.
Digraph enhance_side_info(const SicInstance& inst, const DecodingOrder& order);

/// Minimum GF(2) rank over matrices whose row j has a forced 1 at column j,
/// forced 0 outside `free_cols[j] | bit(j)`, and arbitrary entries on `free_cols[j]`.
/// Column masks use bit (c-1) for column c.
int minrank_pattern(int n, const std::vector<VertexMask>& free_cols);

constexpr int kMinrankMaxVertices = 6;

/// Scalar-linear index coding rate over GF(2). Requires n <= 6.
int minrank_gf2(const Digraph& side_info);

constexpr int kSingleRoundMaxVertices = 5;

struct SingleRoundRate {
    int rate = 0;
    DecodingOrder order;
};

/// Minimum over all decoding orders of the enhanced minrank; ties go to the
/// lexicographically first order. Requires n <= 5.
SingleRoundRate best_single_round_rate(const SicInstance& inst);

constexpr int kCoverMaxVertices = 12;

struct CoverBounds {
    Rational clique_cover;
    Rational cycle_cover;
    Rational weakly_degenerate_cover;
};

/// Upper bounds on the broadcast rate. clique_cover = χ_A; cycle_cover charges
/// disjoint chordless dicycles |C|/(|C|-1) each and the remainder its χ_A;
/// weakly_degenerate_cover = min over vertex partitions of Σ(m_i + 1). Requires n <= 12.
CoverBounds cover_bounds(const SicInstance& inst);

struct Reduction {
    Digraph reduced;
    /// Original labels of the kept component, increasing.
    std::vector<int> kept_vertices;
    std::vector<int> reducible_vertices;
    bool certified = false;
    CaseLabel kept_case = CaseLabel::undecided;
    /// χ_{A,f} of the kept component (= χ_{A,f} of the input).
    Rational rate;
};

/// Keeps the strong component with the largest χ_{A,f} (first one on ties).
Reduction reduce_instance(const SicInstance& inst);

enum class Criticality { critical, non_critical, unknown };

std::string to_string(Criticality c);

struct ArcLabel {
    Arc arc;
    Criticality label = Criticality::unknown;
    std::string reason;
};

/// Three-valued criticality label for every arc, in arc order.
std::vector<ArcLabel> critical_arcs(const Digraph& d);

/// True iff the bipartite transmitter/receiver graph of `d` (Tx i - Rx j when
/// i == j or (i,j) is an arc) has no induced cycle of length >= 6.
bool is_chordal_bipartite_network(const Digraph& d);

struct HelpfulVerdict {
    /// Unset when neither the dicycle test nor the chordal bipartite test decides.
    std::optional<bool> helpful;
    /// New chordless dicycle in the enhanced side information, through the passed arc.
    std::vector<int> witness;
    bool chordal_bipartite = false;
    /// GF(2) minrank of the side information before and after adding the arc (n <= 6).
    std::optional<int> minrank_before;
    std::optional<int> minrank_after;
    bool underlying_cliques_changed = false;
    std::string reason;
};

/// Whether passing W_i to receiver j (cancelling conflict arc (i,j)) enlarges the TIM DoF region.
HelpfulVerdict passing_is_helpful(const Digraph& d, const Arc& arc);

}  // namespace timmp
