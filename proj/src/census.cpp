#include "timmp/census.hpp"

#include "timmp/coloring.hpp"
#include "timmp/enumeration.hpp"
#include "timmp/errors.hpp"
#include "timmp/io.hpp"
#include "timmp/sic.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace timmp {

namespace {

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
    jobs = std::max(1, jobs);
    auto work = [&](int worker) {
        for (std::size_t k = worker; k < count; k += jobs) {
            body(k);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < jobs; ++w) {
        pool.emplace_back(work, w);
    }
    work(0);
    for (auto& t : pool) {
        t.join();
    }
}

CaseLabel parse_case(const std::string& s) {
    for (auto c : {CaseLabel::I, CaseLabel::II, CaseLabel::III, CaseLabel::special, CaseLabel::undecided}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    throw ValidationError("unknown case label '" + s + "'");
}

DofStatus parse_status(const std::string& s) {
    for (auto c : {DofStatus::optimal, DofStatus::linear_optimal, DofStatus::gap}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    throw ValidationError("unknown status '" + s + "'");
}

}  // namespace

std::vector<Digraph> generate_census(int n, int jobs) {
    require_size(n <= kCensusMaxVertices, "generate_census", "n <= " + std::to_string(kCensusMaxVertices));
    if (n < 1) {
        throw ValidationError("census requires n >= 1");
    }
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1));
    jobs = std::max(1, jobs);
    std::vector<std::vector<std::uint64_t>> found(jobs);
    parallel_for(static_cast<std::size_t>(jobs), jobs, [&](std::size_t w) {
        for (std::uint64_t code = w; code < total; code += jobs) {
            const Digraph d = digraph_from_code(n, code);
            if (canonical_form(d).code == code) {
                found[w].push_back(code);
            }
        }
    });
    std::vector<std::uint64_t> codes;
    for (const auto& f : found) {
        codes.insert(codes.end(), f.begin(), f.end());
    }
    std::sort(codes.begin(), codes.end());
    std::vector<Digraph> out;
    out.reserve(codes.size());
    for (auto c : codes) {
        out.push_back(digraph_from_code(n, c));
    }
    return out;
}

std::vector<Arc> non_critical_arcs(const Digraph& d) {
    std::set<Arc> on_cycle;
    for (const auto& c : minimal_dicycles(d).members) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int u = c[i];
            const int v = c[(i + 1) % c.size()];
            on_cycle.insert({u, v});
            if (c.size() == 2) {
                on_cycle.insert({v, u});
            }
        }
    }
    std::vector<Arc> out;
    for (const auto& a : d.arcs()) {
        if (!on_cycle.count(a)) {
            out.push_back(a);
        }
    }
    return out;
}

Digraph reduce_fully(const Digraph& d) {
    Digraph cur = d;
    while (true) {
        Digraph next = reduce_instance(make_sic_instance(cur)).reduced;
        for (const auto& [u, v] : non_critical_arcs(next)) {
            next.remove_arc(u, v);
        }
        if (next == cur) {
            return cur;
        }
        cur = std::move(next);
    }
}

CensusRecord make_census_record(const Digraph& d) {
    CensusRecord r;
    r.id = canonical_form(d).encoding;
    r.n = d.size();
    r.arc_count = d.arc_count();
    r.case_label = classify_case(d).label;
    r.chi_a = dichromatic_number(d).value;
    r.chi_af = fractional_dichromatic(d).value;
    const SymmetricDof s = symmetric_dof(d, r.chi_af);
    r.dsym_achievable = s.achievable;
    r.dsym_outer = s.outer;
    r.status = s.status;
    const Digraph reduced = reduce_fully(d);
    const std::string target = canonical_form(reduced).encoding;
    if (target != r.id) {
        r.reduction_target = target;
        if (r.status == DofStatus::gap) {
            // The reduced instance is a sub-digraph with the same chi_Af, so its
            // bounds on the symmetric DoF apply here as well.
            const SymmetricDof t = symmetric_dof(reduced, r.chi_af);
            r.dsym_outer = min(r.dsym_outer, t.outer);
            if (r.dsym_outer == r.dsym_achievable) {
                r.status = DofStatus::optimal;
            } else if (t.status == DofStatus::linear_optimal) {
                r.status = DofStatus::linear_optimal;
            }
        }
    }
    return r;
}

std::vector<CensusRecord> census_records(const std::vector<Digraph>& instances, int jobs) {
    std::vector<CensusRecord> out(instances.size());
    parallel_for(instances.size(), jobs, [&](std::size_t k) { out[k] = make_census_record(instances[k]); });
    std::sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) { return a.id < b.id; });
    return out;
}

std::vector<std::string> reduction_pipeline(const std::vector<Digraph>& instances) {
    std::set<std::string> residual;
    for (const auto& d : instances) {
        if (!is_strongly_connected(d) || !non_critical_arcs(d).empty() || is_perfect_digraph(d)) {
            continue;
        }
        residual.insert(canonical_form(d).encoding);
    }
    return {residual.begin(), residual.end()};
}

CensusSummary summarize(const std::vector<CensusRecord>& records) {
    CensusSummary s;
    s.instances = static_cast<int>(records.size());
    for (const auto& r : records) {
        switch (r.status) {
            case DofStatus::optimal:
                ++s.optimal;
                break;
            case DofStatus::linear_optimal:
                ++s.linear_optimal;
                break;
            case DofStatus::gap:
                ++s.gap;
                break;
        }
    }
    return s;
}

std::string summary_text(const CensusSummary& s) {
    std::ostringstream out;
    out << s.instances << " instances, " << s.optimal << " optimal";
    if (s.linear_optimal > 0) {
        out << ", " << s.linear_optimal << " linear_optimal";
    }
    if (s.gap > 0) {
        out << ", " << s.gap << " undecided";
    }
    out << "\noptimal: " << (s.optimal + s.linear_optimal) << '/' << s.instances << " (linear)\n";
    return out.str();
}

std::string census_csv(const std::vector<CensusRecord>& records) {
    std::ostringstream out;
    out << "id,n,arcs,case,chi_a,chi_af,dsym_achievable,dsym_outer,status,reduction_target\n";
    for (const auto& r : records) {
        out << r.id << ',' << r.n << ',' << r.arc_count << ',' << to_string(r.case_label) << ',' << r.chi_a << ','
            << r.chi_af.str() << ',' << r.dsym_achievable.str() << ',' << r.dsym_outer.str() << ','
            << to_string(r.status) << ',' << r.reduction_target << '\n';
    }
    return out.str();
}

std::string census_json(const std::vector<CensusRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        arr.push_back({{"id", r.id},
                       {"n", r.n},
                       {"arcs", r.arc_count},
                       {"case", to_string(r.case_label)},
                       {"chi_a", r.chi_a},
                       {"chi_af", r.chi_af.str()},
                       {"dsym_achievable", r.dsym_achievable.str()},
                       {"dsym_outer", r.dsym_outer.str()},
                       {"status", to_string(r.status)},
                       {"reduction_target", r.reduction_target}});
    }
    return arr.dump(2) + "\n";
}

std::vector<CensusRecord> census_from_json(const std::string& text) {
    std::vector<CensusRecord> out;
    try {
        for (const auto& j : nlohmann::json::parse(text)) {
            CensusRecord r;
            r.id = j.at("id").get<std::string>();
            r.n = j.at("n").get<int>();
            r.arc_count = j.at("arcs").get<int>();
            r.case_label = parse_case(j.at("case").get<std::string>());
            r.chi_a = j.at("chi_a").get<int>();
            r.chi_af = Rational::parse(j.at("chi_af").get<std::string>());
            r.dsym_achievable = Rational::parse(j.at("dsym_achievable").get<std::string>());
            r.dsym_outer = Rational::parse(j.at("dsym_outer").get<std::string>());
            r.status = parse_status(j.at("status").get<std::string>());
            r.reduction_target = j.at("reduction_target").get<std::string>();
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed census cache: ") + e.what());
    }
    return out;
}

std::filesystem::path census_cache_dir() {
    const char* env = std::getenv("TIMMP_CACHE_DIR");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path(".timmp-cache");
}

CensusRun run_census(int n, bool force, int jobs) {
    require_size(n <= kCensusMaxVertices, "census", "n <= " + std::to_string(kCensusMaxVertices));
    CensusRun run;
    run.cache_file = census_cache_dir() / ("census_n" + std::to_string(n) + ".json");
    if (!force && std::filesystem::exists(run.cache_file)) {
        run.records = census_from_json(read_text_file(run.cache_file));
        run.from_cache = true;
        return run;
    }
    run.records = census_records(generate_census(n, jobs), jobs);
    write_text_file(run.cache_file, census_json(run.records));
    return run;
}

void write_report(const std::vector<CensusRecord>& records, const std::filesystem::path& csv_path) {
    write_text_file(csv_path, census_csv(records));
}

}  // namespace timmp
