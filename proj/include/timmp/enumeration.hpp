#pragma once

#include "timmp/graph_core.hpp"

#include <set>
#include <string>
#include <vector>

namespace timmp {

enum class StructureKind { clique, dicycle, acyclic_set };

std::string to_string(StructureKind kind);

/// A family of vertex sets. Cliques and acyclic sets are stored sorted;
/// dicycles are stored in traversal order starting at their smallest vertex.
struct StructureFamily {
    StructureKind kind = StructureKind::clique;
    std::vector<std::vector<int>> members;

    std::vector<VertexMask> masks() const;
};

constexpr int kEnumerationMaxVertices = 20;

/// Maximal cliques of the symmetric part; vertices in no bidirected pair appear as singletons.
StructureFamily maximal_cliques(const Digraph& d);

/// Induced chordless dicycles, including bidirected pairs as length-2 cycles.
StructureFamily minimal_dicycles(const Digraph& d);

/// Inclusion-maximal acyclic vertex sets. Requires n <= 20.
StructureFamily maximal_acyclic_sets(const Digraph& d);

/// Every nonempty acyclic vertex set, as masks in increasing numeric order. Requires n <= 20.
std::vector<VertexMask> all_acyclic_sets(const Digraph& d);

/// Size of the largest acyclic induced sub-digraph. Requires n <= 20.
int mais_number(const Digraph& d);

enum class Parity { odd, even };

struct DegeneracyProfile {
    int weak_degeneracy = 0;
    int partial_clique_degree = 0;
    std::set<Parity> dicycle_parities;
};

/// Weak degeneracy of the sub-digraph induced by `mask`. Requires n <= 20.
int weak_degeneracy(const Digraph& d, VertexMask mask);
/// Weak degeneracy of every induced sub-digraph, indexed by vertex mask. Requires n <= 20.
std::vector<std::uint8_t> weak_degeneracy_table(const Digraph& d);

DegeneracyProfile degeneracy_profile(const Digraph& d);

}  // namespace timmp
