#pragma once

#include "timmp/coloring.hpp"
#include "timmp/dof_region.hpp"
#include "timmp/graph_core.hpp"
#include "timmp/polyhedra.hpp"
#include "timmp/sic.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace timmp {

using Json = nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& p);
/// Creates parent directories as needed.
void write_text_file(const std::filesystem::path& p, const std::string& text);

/// {"K": 4, "transmit_sets": {"1": [1,2], ...}}
BipartiteTopology topology_from_json(const std::string& text);
Json topology_to_json(const BipartiteTopology& t);

/// {"n": 4, "arcs": [[1,2],[2,1]]}
Digraph digraph_from_json(const std::string& text);
Json digraph_to_json(const Digraph& d);

/// {"rows": 2, "cols": 4, "data": [[1,1,1,0],[1,0,1,1]]}
BinaryMatrix matrix_from_json(const std::string& text);
Json matrix_to_json(const BinaryMatrix& m);

/// Graphviz digraph; bidirected pairs become one edge with dir=both.
std::string to_dot(const Digraph& d, const std::string& name = "D");

Json rational_json(const Rational& r);
Json point_json(const Point& p);
Json family_json(const StructureFamily& f);
Json coloring_json(const ColoringSolution& s);
Json schedule_json(const Schedule& s);
Json simulation_json(const SimulationResult& r);
Json matrix_verdict_json(const MatrixVerdict& v);
Json case_verdict_json(const CaseVerdict& v);
Json polytope_json(const RationalPolytope& p);
Json dof_region_json(const DoFRegion& r);
Json symmetric_dof_json(const SymmetricDof& s);
Json reduction_json(const Reduction& r);
Json helpful_json(const HelpfulVerdict& v);

}  // namespace timmp
