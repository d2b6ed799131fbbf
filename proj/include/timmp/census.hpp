#pragma once

#include "timmp/dof_region.hpp"
#include "timmp/graph_core.hpp"
#include "timmp/rational.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace timmp {

constexpr int kCensusMaxVertices = 5;

/// One representative per isomorphism class of digraphs on n vertices: the
/// labeling whose adjacency code is minimal. Sorted by code. Requires n <= 5.
std::vector<Digraph> generate_census(int n, int jobs = 1);

struct CensusRecord {
    /// canonical_form encoding.
    std::string id;
    int n = 0;
    int arc_count = 0;
    CaseLabel case_label = CaseLabel::undecided;
    int chi_a = 0;
    Rational chi_af;
    Rational dsym_achievable;
    Rational dsym_outer;
    DofStatus status = DofStatus::gap;
    /// Canonical id of the instance left after vertex and arc reduction; empty when irreducible.
    std::string reduction_target;
};

CensusRecord make_census_record(const Digraph& d);

/// Records for every instance, sorted by id.
std::vector<CensusRecord> census_records(const std::vector<Digraph>& instances, int jobs = 1);

/// Arcs lying on no chordless dicycle.
std::vector<Arc> non_critical_arcs(const Digraph& d);

/// Repeatedly keeps the strong component of largest χ_{A,f} and drops non-critical arcs.
Digraph reduce_fully(const Digraph& d);

/// Instances that are strongly connected, have every arc on a chordless dicycle
/// and are not perfect digraphs. Canonical ids, sorted.
std::vector<std::string> reduction_pipeline(const std::vector<Digraph>& instances);

struct CensusSummary {
    int instances = 0;
    int optimal = 0;
    int linear_optimal = 0;
    int gap = 0;
};

CensusSummary summarize(const std::vector<CensusRecord>& records);
/// "N instances, k optimal" (plus linear_optimal and gap counts when nonzero),
/// then "optimal: m/N (linear)".
std::string summary_text(const CensusSummary& s);

std::string census_csv(const std::vector<CensusRecord>& records);
std::string census_json(const std::vector<CensusRecord>& records);
std::vector<CensusRecord> census_from_json(const std::string& text);

/// $TIMMP_CACHE_DIR, or ".timmp-cache" when unset.
std::filesystem::path census_cache_dir();

struct CensusRun {
    std::vector<CensusRecord> records;
    bool from_cache = false;
    std::filesystem::path cache_file;
};

/// Loads census_n{n}.json from the cache directory unless `force`; otherwise
/// computes the records and rewrites the cache.
CensusRun run_census(int n, bool force, int jobs);

void write_report(const std::vector<CensusRecord>& records, const std::filesystem::path& csv_path);

}  // namespace timmp
