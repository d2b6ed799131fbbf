#include "timmp/io.hpp"

#include "timmp/errors.hpp"

#include <fstream>
#include <sstream>

namespace timmp {

std::string read_text_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + p.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + p.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
        throw IoError("cannot write " + p.string());
    }
}

namespace {

nlohmann::json parse_json(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

template <class F>
auto with_schema(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string(what) + ": schema violation: " + e.what());
    }
}

}  // namespace

BipartiteTopology topology_from_json(const std::string& text) {
    const auto j = parse_json(text, "topology");
    auto t = with_schema("topology", [&] {
        BipartiteTopology t;
        t.K = j.at("K").get<int>();
        for (const auto& [key, value] : j.at("transmit_sets").items()) {
            int receiver = 0;
            try {
                std::size_t used = 0;
                receiver = std::stoi(key, &used);
                if (used != key.size()) {
                    throw std::invalid_argument(key);
                }
            } catch (const std::exception&) {
                throw ValidationError("topology: receiver key '" + key + "' is not an integer");
            }
            t.transmit_sets[receiver] = value.get<std::vector<int>>();
        }
        return t;
    });
    t.validate();
    return t;
}

Json topology_to_json(const BipartiteTopology& t) {
    Json sets = Json::object();
    for (const auto& [j, set] : t.transmit_sets) {
        sets[std::to_string(j)] = set;
    }
    return Json{{"K", t.K}, {"transmit_sets", sets}};
}

Digraph digraph_from_json(const std::string& text) {
    const auto j = parse_json(text, "digraph");
    return with_schema("digraph", [&] {
        Digraph d(j.at("n").get<int>());
        for (const auto& a : j.at("arcs")) {
            if (!a.is_array() || a.size() != 2) {
                throw ValidationError("digraph: each arc must be a pair [i, j]");
            }
            d.add_arc(a[0].get<int>(), a[1].get<int>());
        }
        return d;
    });
}

Json digraph_to_json(const Digraph& d) {
    Json arcs = Json::array();
    for (const auto& [u, v] : d.arcs()) {
        arcs.push_back({u, v});
    }
    return Json{{"n", d.size()}, {"arcs", arcs}};
}

BinaryMatrix matrix_from_json(const std::string& text) {
    const auto j = parse_json(text, "matrix");
    return with_schema("matrix", [&] {
        const int rows = j.at("rows").get<int>();
        const int cols = j.at("cols").get<int>();
        BinaryMatrix m(j.at("data").get<std::vector<std::vector<int>>>());
        if (m.rows != rows || (rows > 0 && m.cols != cols)) {
            throw ValidationError("matrix: data shape does not match rows/cols");
        }
        m.cols = cols;
        return m;
    });
}

Json matrix_to_json(const BinaryMatrix& m) { return Json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}}; }

std::string to_dot(const Digraph& d, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 1; v <= d.size(); ++v) {
        out << "  " << v << ";\n";
    }
    for (const auto& [u, v] : d.arcs()) {
        if (d.has_arc(v, u)) {
            if (u < v) {
                out << "  " << u << " -> " << v << " [dir=both];\n";
            }
        } else {
            out << "  " << u << " -> " << v << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

Json rational_json(const Rational& r) { return r.str(); }

Json point_json(const Point& p) {
    Json out = Json::array();
    for (const auto& x : p) {
        out.push_back(x.str());
    }
    return out;
}

Json family_json(const StructureFamily& f) { return Json(f.members); }

Json coloring_json(const ColoringSolution& s) {
    Json sets = Json::array();
    for (std::size_t k = 0; k < s.sets.size(); ++k) {
        sets.push_back({{"set", s.sets[k]}, {"weight", s.weights[k].str()}, {"order", s.orders[k]}});
    }
    return Json{{"n", s.n}, {"value", s.value.str()}, {"sets", sets}};
}

Json schedule_json(const Schedule& s) {
    Json slots = Json::array();
    for (const auto& slot : s.slots) {
        slots.push_back({{"set", slot.set}, {"order", slot.order}});
    }
    return Json{{"n", s.n}, {"period", s.period}, {"slot_counts", s.slot_counts}, {"slots", slots}};
}

Json simulation_json(const SimulationResult& r) {
    Json rates = Json::array();
    for (const auto& x : r.rates) {
        rates.push_back(x.str());
    }
    Json out{{"ok", r.ok}, {"rates", rates}};
    if (r.error) {
        out["error"] = {{"slot", r.error->slot}, {"reason", r.error->reason}};
    }
    return out;
}

namespace {

Json mni_json(const MniHit& h) {
    Json out{{"name", h.name}, {"relation", h.relation}};
    if (h.relation == "submatrix") {
        out["rows"] = h.rows;
        out["cols"] = h.cols;
    } else if (h.relation == "minor") {
        out["deleted"] = h.deleted;
        out["contracted"] = h.contracted;
    }
    return out;
}

}  // namespace

Json matrix_verdict_json(const MatrixVerdict& v) {
    Json out{{"kind", v.kind}, {"result", v.result}};
    if (!v.witness_rows.empty() || !v.witness_cols.empty()) {
        out["witness_rows"] = v.witness_rows;
        out["witness_cols"] = v.witness_cols;
    }
    if (v.fractional_vertex) {
        out["fractional_vertex"] = point_json(*v.fractional_vertex);
    }
    if (v.mni) {
        out["mni"] = mni_json(*v.mni);
    }
    return out;
}

Json case_verdict_json(const CaseVerdict& v) {
    Json out{{"label", to_string(v.label)}};
    if (!v.special_name.empty()) {
        out["special"] = v.special_name;
    }
    out["has_long_dicycle"] = v.has_long_dicycle;
    out["clique_matrix_perfect"] = v.clique_matrix_perfect;
    out["has_large_clique"] = v.has_large_clique;
    if (v.dicycle_matrix_ideal) {
        out["dicycle_matrix_ideal"] = *v.dicycle_matrix_ideal;
    }
    if (!v.reduced_vertices.empty()) {
        out["reduced_vertices"] = v.reduced_vertices;
    }
    if (v.reduced_mni_submatrix) {
        out["reduced_mni_submatrix"] = mni_json(*v.reduced_mni_submatrix);
    }
    if (v.reduced_mni_minor) {
        out["reduced_mni_minor"] = mni_json(*v.reduced_mni_minor);
    }
    out["intersection_condition"] = v.intersection_condition;
    out["evidence"] = v.evidence;
    return out;
}

Json polytope_json(const RationalPolytope& p) {
    Json rows = Json::array();
    for (const auto& c : p.inequalities) {
        Json coeffs = Json::array();
        for (const auto& x : c.coeffs) {
            coeffs.push_back(x.str());
        }
        rows.push_back({{"coeffs", coeffs}, {"sense", to_string(c.sense)}, {"rhs", c.rhs.str()}});
    }
    return Json{{"dimension", p.dimension}, {"inequalities", rows}};
}

Json dof_region_json(const DoFRegion& r) {
    Json points = Json::array();
    for (const auto& p : r.extreme_points) {
        points.push_back(point_json(p));
    }
    Json witnesses = Json::array();
    for (const auto& w : r.achievability) {
        Json item{{"point", point_json(w.point)}, {"integral", w.integral}};
        if (w.integral) {
            item["support"] = w.support;
            item["support_acyclic"] = w.support_acyclic;
            if (w.support_acyclic) {
                item["order"] = w.order;
            }
        }
        witnesses.push_back(item);
    }
    Json out{{"polytope", polytope_json(r.polytope)},
             {"case", case_verdict_json(r.verdict)},
             {"extreme_points", points},
             {"achievability", witnesses},
             {"certified", r.certified},
             {"inner_symmetric", r.inner_symmetric.str()}};
    if (r.symmetric_certificate) {
        const auto& c = *r.symmetric_certificate;
        Json terms = Json::array();
        for (std::size_t k = 0; k < c.points.size(); ++k) {
            terms.push_back({{"coefficient", c.coefficients[k].str()}, {"point", point_json(c.points[k])}});
        }
        out["symmetric_certificate"] = {{"target", point_json(c.target)}, {"terms", terms}, {"verified", c.verified}};
    }
    return out;
}

Json symmetric_dof_json(const SymmetricDof& s) {
    Json out{{"achievable", s.achievable.str()}, {"outer", s.outer.str()}, {"status", to_string(s.status)}};
    if (!s.certificate.empty()) {
        out["certificate"] = s.certificate;
    }
    return out;
}

Json reduction_json(const Reduction& r) {
    return Json{{"kept_vertices", r.kept_vertices},
                {"reducible_vertices", r.reducible_vertices},
                {"reduced", digraph_to_json(r.reduced)},
                {"kept_case", to_string(r.kept_case)},
                {"certified", r.certified},
                {"rate", r.rate.str()}};
}

Json helpful_json(const HelpfulVerdict& v) {
    Json out = Json::object();
    out["helpful"] = v.helpful ? Json(*v.helpful) : Json(nullptr);
    if (!v.witness.empty()) {
        out["witness_cycle"] = v.witness;
    }
    out["chordal_bipartite"] = v.chordal_bipartite;
    if (v.minrank_before) {
        out["minrank_before"] = *v.minrank_before;
        out["minrank_after"] = *v.minrank_after;
    }
    out["underlying_cliques_changed"] = v.underlying_cliques_changed;
    out["reason"] = v.reason;
    return out;
}

}  // namespace timmp
