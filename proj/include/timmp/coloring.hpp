#pragma once

#include "timmp/graph_core.hpp"
#include "timmp/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace timmp {

/// Weighted family of acyclic sets covering every vertex at least once.
struct ColoringSolution {
    int n = 0;
    /// Sorted vertex lists, in canonical (lexicographic) order.
    std::vector<std::vector<int>> sets;
    std::vector<Rational> weights;
    /// Topological decoding order of each set (smallest-source tie-break).
    std::vector<std::vector<int>> orders;
    Rational value;
};

struct DichromaticResult {
    int value = 0;
    ColoringSolution solution;
};

struct FractionalResult {
    Rational value;
    ColoringSolution solution;
};

/// Exact χ_A by backtracking over color assignments, seeded with the LP lower bound. Requires n <= 20.
DichromaticResult dichromatic_number(const Digraph& d);

/// Exact χ_{A,f} from the covering LP over maximal acyclic sets. Requires n <= 20.
FractionalResult fractional_dichromatic(const Digraph& d);

constexpr int kLocalMaxVertices = 12;

/// Exact fractional local dichromatic number (min-max LP over all acyclic sets). Requires n <= 12.
FractionalResult local_fractional_dichromatic(const Digraph& d);

struct Slot {
    std::vector<int> set;
    std::vector<int> order;
};

struct Schedule {
    int n = 0;
    std::vector<Slot> slots;
    /// Number of slots; each slot carries one fresh symbol per scheduled message.
    int period = 0;
    /// Slots serving each vertex (index v-1).
    std::vector<int> slot_counts;
};

/// Time-sharing schedule for a coloring solution. With L the lcm of weight
/// denominators, set A occupies weight(A)*L consecutive slots; vertices
/// covered more than L times are dropped from their later slots so every
/// vertex is served exactly L times and the period equals value*L.
Schedule extract_schedule(const ColoringSolution& sol);

struct SimulationError {
    int slot = 0;
    std::string reason;
};

struct SimulationResult {
    bool ok = false;
    /// Decoded slots per vertex divided by the period (index v-1).
    std::vector<Rational> rates;
    std::optional<SimulationError> error;
};

/// Noiseless successive decoding: a vertex decodes once every in-neighbor
/// scheduled in the same slot has already decoded and passed its message.
SimulationResult simulate_schedule(const Digraph& d, const Schedule& s);

}  // namespace timmp
