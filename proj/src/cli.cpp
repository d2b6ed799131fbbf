#include "timmp/cli.hpp"

#include "timmp/census.hpp"
#include "timmp/coloring.hpp"
#include "timmp/dof_region.hpp"
#include "timmp/enumeration.hpp"
#include "timmp/errors.hpp"
#include "timmp/io.hpp"
#include "timmp/sic.hpp"
#include "timmp/tradeoff.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <regex>
#include <sstream>

namespace timmp {

namespace {

struct Options {
    bool json = false;
    bool quiet = false;
    std::string topology;
    std::string digraph;
    std::string report;
    std::string out;
    bool dump_structures = false;
    int n = 0;
    bool force = false;
    int jobs = 1;
    int budget = 0;
    std::string kind;
    std::string file;
    std::string named;
    std::string op;
    std::string arc;
};

std::string human(const Rational& r) {
    if (r.is_integer()) {
        return r.pretty();
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", r.approx());
    return r.str() + " (" + buf + ")";
}

std::string list_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? "," : "") + std::to_string(v[k]);
    }
    return s + "}";
}

Digraph load_input(const Options& o) {
    if (o.topology.empty() == o.digraph.empty()) {
        throw ValidationError("exactly one of --topology or --digraph is required");
    }
    if (!o.topology.empty()) {
        return build_conflict_digraph(topology_from_json(read_text_file(o.topology)));
    }
    return digraph_from_json(read_text_file(o.digraph));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_analyze(const Options& o, std::ostream& out) {
    const Digraph d = load_input(o);
    const DoFRegion region = dof_region(d);
    const FractionalResult frac = fractional_dichromatic(d);
    const DichromaticResult integral = dichromatic_number(d);
    const SymmetricDof sym = symmetric_dof(d, frac.value);

    Json report{{"digraph", digraph_to_json(d)},
                {"chi_a", integral.value},
                {"chi_af", frac.value.str()},
                {"fractional_coloring", coloring_json(frac.solution)},
                {"symmetric_dof", symmetric_dof_json(sym)},
                {"region", dof_region_json(region)}};
    if (o.dump_structures) {
        report["structures"] = {{"cliques", family_json(maximal_cliques(d))},
                                {"dicycles", family_json(minimal_dicycles(d))},
                                {"maximal_acyclic_sets", family_json(maximal_acyclic_sets(d))}};
    }
    if (!o.report.empty()) {
        write_text_file(o.report, report.dump(2) + "\n");
    }
    if (o.json) {
        emit(out, report);
    } else if (!o.quiet) {
        out << "vertices: " << d.size() << ", arcs: " << d.arc_count() << '\n';
        out << "case: " << to_string(region.verdict.label);
        if (!region.verdict.special_name.empty()) {
            out << " (" << region.verdict.special_name << ")";
        }
        out << '\n';
        out << "chi_A: " << integral.value << '\n';
        out << "chi_Af: " << human(frac.value) << '\n';
        out << "d_sym: " << sym.achievable.str() << ", outer " << sym.outer.str() << ", status " << to_string(sym.status)
            << '\n';
        if (!sym.certificate.empty()) {
            out << "linear bound: " << sym.certificate << '\n';
        }
        out << "extreme points: " << region.extreme_points.size()
            << (region.certified ? " (all integral with acyclic support)" : "") << '\n';
        for (const auto& line : region.verdict.evidence) {
            out << "  " << line << '\n';
        }
    }
    return kExitOk;
}

int cmd_schedule(const Options& o, std::ostream& out) {
    const Digraph d = load_input(o);
    const FractionalResult frac = fractional_dichromatic(d);
    const Schedule s = extract_schedule(frac.solution);
    const SimulationResult sim = simulate_schedule(d, s);
    const Json report{{"chi_af", frac.value.str()}, {"schedule", schedule_json(s)}, {"simulation", simulation_json(sim)}};
    if (!o.out.empty()) {
        write_text_file(o.out, report.dump(2) + "\n");
    }
    if (o.json) {
        emit(out, report);
    } else if (!o.quiet) {
        out << "period: " << s.period << " slots\n";
        for (std::size_t k = 0; k < s.slots.size(); ++k) {
            out << "slot " << k + 1 << ": decode order";
            for (int v : s.slots[k].order) {
                out << ' ' << v;
            }
            out << '\n';
        }
        out << "simulation: " << (sim.ok ? "ok" : "failed");
        if (sim.error) {
            out << " at slot " << sim.error->slot << ": " << sim.error->reason;
        }
        out << '\n';
        if (sim.ok && !sim.rates.empty()) {
            const bool uniform =
                std::all_of(sim.rates.begin(), sim.rates.end(), [&](const Rational& r) { return r == sim.rates[0]; });
            if (uniform) {
                out << "per-user rate: " << human(sim.rates[0]) << '\n';
            }
        }
    }
    return sim.ok ? kExitOk : kExitInternal;
}

int cmd_tradeoff(const Options& o, std::ostream& out) {
    const Digraph d = load_input(o);
    const auto curve = tradeoff_curve(d, o.budget, o.jobs);
    const std::string csv = tradeoff_csv(curve);
    if (!o.out.empty()) {
        write_text_file(o.out, csv);
    }
    if (o.json) {
        Json arr = Json::array();
        for (const auto& pt : curve) {
            Json w = Json::array();
            for (const auto& [i, j] : pt.witness) {
                w.push_back({i, j});
            }
            arr.push_back({{"p", pt.p}, {"r", pt.r}, {"witness_arcs", w}});
        }
        emit(out, arr);
    } else if (!o.quiet && o.out.empty()) {
        out << csv;
    }
    return kExitOk;
}

int cmd_matrix_check(const Options& o, std::ostream& out) {
    if (o.file.empty() == o.named.empty()) {
        throw ValidationError("exactly one of --file or --named is required");
    }
    const BinaryMatrix m = o.file.empty() ? named_matrix(o.named) : matrix_from_json(read_text_file(o.file));
    MatrixVerdict v;
    if (o.kind == "tu") {
        v = is_totally_unimodular(m);
    } else if (o.kind == "balanced") {
        v = is_balanced(m);
    } else if (o.kind == "ideal") {
        v = is_ideal(m);
    } else if (o.kind == "perfect") {
        v = is_perfect_matrix(m);
    } else {
        v = is_mni_matrix(m);
    }
    if (o.json) {
        emit(out, matrix_verdict_json(v));
    } else if (!o.quiet) {
        out << v.kind << ": " << (v.result ? "true" : "false") << '\n';
        if (!v.witness_rows.empty()) {
            out << "witness submatrix: rows " << list_str(v.witness_rows) << " cols " << list_str(v.witness_cols)
                << " (0-based)\n";
        }
        if (v.fractional_vertex) {
            out << "fractional vertex: " << point_str(*v.fractional_vertex) << '\n';
        }
        if (v.mni) {
            out << "MNI witness: " << v.mni->name << " (" << v.mni->relation << ")\n";
        }
    }
    return kExitOk;
}

Arc parse_arc(const std::string& text) {
    static const std::regex re(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw ValidationError("--arc must look like i,j");
    }
    return {std::stoi(m[1]), std::stoi(m[2])};
}

int cmd_sic(const Options& o, std::ostream& out) {
    const Digraph d = load_input(o);
    const SicInstance inst = make_sic_instance(d);
    Json report;
    std::ostringstream text;
    if (o.op == "rate") {
        const Rational chi_af = fractional_dichromatic(d).value;
        const CoverBounds b = cover_bounds(inst);
        const int mais = mais_number(inst.side_info);
        report = Json{{"chi_af", chi_af.str()},
                      {"mais_lower_bound", mais},
                      {"clique_cover", b.clique_cover.str()},
                      {"cycle_cover", b.cycle_cover.str()},
                      {"weakly_degenerate_cover", b.weakly_degenerate_cover.str()}};
        text << "orthogonal access rate (chi_Af): " << human(chi_af) << '\n';
        text << "index coding lower bound without successive decoding (MAIS): " << mais << '\n';
        text << "clique cover: " << human(b.clique_cover) << '\n';
        text << "cycle cover: " << human(b.cycle_cover) << '\n';
        text << "weakly degenerate cover: " << human(b.weakly_degenerate_cover) << '\n';
        if (d.size() <= kSingleRoundMaxVertices) {
            const SingleRoundRate sr = best_single_round_rate(inst);
            report["single_round_rate"] = sr.rate;
            report["single_round_order"] = sr.order.order;
            text << "single-round SIC rate (GF(2)): " << sr.rate << " with order " << list_str(sr.order.order) << '\n';
        }
        if (d.size() <= kMinrankMaxVertices) {
            report["minrank_gf2"] = minrank_gf2(inst.side_info);
            text << "minrank over GF(2): " << report["minrank_gf2"].get<int>() << '\n';
        }
    } else if (o.op == "reduce") {
        const Reduction r = reduce_instance(inst);
        report = reduction_json(r);
        text << "kept vertices: " << list_str(r.kept_vertices) << '\n';
        text << "reducible vertices: " << list_str(r.reducible_vertices) << '\n';
        text << "rate: " << human(r.rate) << " (kept component case " << to_string(r.kept_case)
             << (r.certified ? ", certified" : ", not certified") << ")\n";
    } else if (o.op == "critical") {
        report = Json::array();
        for (const auto& l : critical_arcs(d)) {
            report.push_back(
                {{"arc", {l.arc.first, l.arc.second}}, {"label", to_string(l.label)}, {"reason", l.reason}});
            text << "(" << l.arc.first << "," << l.arc.second << "): " << to_string(l.label) << " - " << l.reason
                 << '\n';
        }
    } else {
        if (o.arc.empty()) {
            throw ValidationError("--op helpful requires --arc i,j");
        }
        const Arc a = parse_arc(o.arc);
        const HelpfulVerdict v = passing_is_helpful(d, a);
        report = helpful_json(v);
        text << "helpful: " << (v.helpful ? (*v.helpful ? "true" : "false") : "unknown") << '\n';
        text << "reason: " << v.reason << '\n';
        if (!v.witness.empty()) {
            text << "new dicycle: " << list_str(v.witness) << '\n';
        }
        if (v.minrank_before) {
            text << "minrank: " << *v.minrank_before << " -> " << *v.minrank_after << '\n';
        }
    }
    if (o.json) {
        emit(out, report);
    } else if (!o.quiet) {
        out << text.str();
    }
    return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out) {
    const CensusRun run = run_census(o.n, o.force, o.jobs);
    if (!o.out.empty()) {
        write_report(run.records, o.out);
    }
    const CensusSummary s = summarize(run.records);
    if (o.json) {
        emit(out, Json{{"n", o.n},
                       {"instances", s.instances},
                       {"optimal", s.optimal},
                       {"linear_optimal", s.linear_optimal},
                       {"undecided", s.gap},
                       {"cache", run.cache_file.string()},
                       {"from_cache", run.from_cache}});
    } else if (!o.quiet) {
        out << summary_text(s);
    }
    return kExitOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
    const Digraph d = load_input(o);
    const std::string dot = to_dot(d);
    if (o.out.empty()) {
        out << dot;
        return kExitOk;
    }
    std::filesystem::path path(o.out);
    write_text_file(path, dot);
    std::filesystem::path sidecar = path;
    sidecar.replace_extension(".json");
    write_text_file(sidecar, digraph_to_json(d).dump(2) + "\n");
    if (!o.quiet) {
        out << "wrote " << path.string() << " and " << sidecar.string() << '\n';
    }
    return kExitOk;
}

void add_input_options(CLI::App* sub, Options& o) {
    auto* t = sub->add_option("--topology", o.topology, "Topology JSON file");
    auto* g = sub->add_option("--digraph", o.digraph, "Conflict digraph JSON file");
    t->excludes(g);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact analysis of topological interference management with message passing", "timmp"};
    app.require_subcommand(1, 1);
    app.add_flag("--json", o.json, "Machine-readable JSON output");
    app.add_flag("--quiet", o.quiet, "Suppress human-readable output");
    app.fallthrough();

    auto* analyze = app.add_subcommand("analyze", "DoF region, case verdict and symmetric DoF");
    add_input_options(analyze, o);
    analyze->add_option("--report", o.report, "Write the JSON region report to this file");
    analyze->add_flag("--dump-structures", o.dump_structures, "Include cliques, dicycles and acyclic sets");

    auto* census = app.add_subcommand("census", "Classify every digraph on n vertices");
    census->add_option("--n", o.n, "Vertex count (1..5)")->required();
    census->add_option("--out", o.out, "CSV report path");
    census->add_flag("--force", o.force, "Recompute even when a cached run exists");
    census->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* schedule = app.add_subcommand("schedule", "Orthogonal-access schedule and decoding simulation");
    add_input_options(schedule, o);
    schedule->add_option("--out", o.out, "Write the schedule JSON to this file");

    auto* tradeoff = app.add_subcommand("tradeoff", "Rank versus message-passing budget");
    add_input_options(tradeoff, o);
    tradeoff->add_option("--budget", o.budget, "Largest number of passed messages")->required()->check(
        CLI::NonNegativeNumber);
    tradeoff->add_option("--out", o.out, "CSV output path");
    tradeoff->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* matrix = app.add_subcommand("matrix-check", "Integrality class of a 0/1 matrix");
    matrix->add_option("--kind", o.kind, "tu, balanced, ideal, perfect or mni")
        ->required()
        ->check(CLI::IsMember({"tu", "balanced", "ideal", "perfect", "mni"}));
    auto* file = matrix->add_option("--file", o.file, "Matrix JSON file");
    auto* named = matrix->add_option("--named", o.named, "circulant(n,r), projective(n) or fano");
    file->excludes(named);

    auto* sic = app.add_subcommand("sic", "Successive index coding analyses");
    add_input_options(sic, o);
    sic->add_option("--op", o.op, "rate, reduce, critical or helpful")
        ->required()
        ->check(CLI::IsMember({"rate", "reduce", "critical", "helpful"}));
    sic->add_option("--arc", o.arc, "Conflict arc i,j for --op helpful");

    auto* dot = app.add_subcommand("export-dot", "Graphviz export with a JSON sidecar");
    add_input_options(dot, o);
    dot->add_option("--out", o.out, "DOT output path; the sidecar replaces the extension with .json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "timmp: error: usage: " << msg << '\n';
        return kExitValidation;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(o, out);
        }
        if (census->parsed()) {
            return cmd_census(o, out);
        }
        if (schedule->parsed()) {
            return cmd_schedule(o, out);
        }
        if (tradeoff->parsed()) {
            return cmd_tradeoff(o, out);
        }
        if (matrix->parsed()) {
            return cmd_matrix_check(o, out);
        }
        if (sic->parsed()) {
            return cmd_sic(o, out);
        }
        return cmd_export_dot(o, out);
    } catch (const SizeGuardError& e) {
        err << "timmp: error: size_guard: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const ValidationError& e) {
        err << "timmp: error: validation: " << e.what() << '\n';
        return kExitValidation;
    } catch (const IoError& e) {
        err << "timmp: error: io: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "timmp: error: internal: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace timmp
